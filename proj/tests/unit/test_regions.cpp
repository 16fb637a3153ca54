#include <algorithm>
#include <random>
#include <set>

#include "clawham/closure.hpp"
#include "clawham/families.hpp"
#include "clawham/graph.hpp"
#include "clawham/patterns.hpp"
#include "clawham/regions.hpp"
#include "clawham/verify.hpp"
#include "doctest.h"

using namespace clawham;

namespace {

Graph cycle_graph(int n) {
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

// Reference check that a vertex set is a maximal clique of g.
bool is_maximal_clique(const Graph& g, const VertexSet& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (!g.adjacent(s[i], s[j])) return false;
    for (int w = 0; w < g.order(); ++w) {
        if (std::find(s.begin(), s.end(), w) != s.end()) continue;
        bool dominates = true;
        for (int v : s)
            if (!g.adjacent(w, v)) {
                dominates = false;
                break;
            }
        if (dominates) return false;
    }
    return true;
}

void check_decomposition_invariants(const Graph& g) {
    const RegionDecomposition d = decompose(g);
    CHECK(d.base == g);
    CHECK(d.closed == closure(g).final);

    // Regions are exactly maximal cliques, sorted, lex-ordered, covering.
    std::uint64_t covered = 0;
    for (std::size_t r = 0; r < d.regions.size(); ++r) {
        CHECK(std::is_sorted(d.regions[r].begin(), d.regions[r].end()));
        CHECK(is_maximal_clique(d.closed, d.regions[r]));
        if (r + 1 < d.regions.size()) CHECK(d.regions[r] < d.regions[r + 1]);
        for (int v : d.regions[r]) covered |= 1ull << v;
    }
    if (g.order() > 0) CHECK(covered == all_vertices_mask(g.order()));

    // Membership lists point back at the regions; 1 region = interior, 2 = frontier.
    for (int v = 0; v < g.order(); ++v) {
        const auto& member = d.membership[static_cast<std::size_t>(v)];
        CHECK((member.size() == 1 || member.size() == 2));
        CHECK(d.is_interior(v) == (member.size() == 1));
        CHECK(d.is_frontier(v) == (member.size() == 2));
        for (int r : member) {
            const auto& region = d.regions[static_cast<std::size_t>(r)];
            CHECK(std::find(region.begin(), region.end(), v) != region.end());
        }
    }

    // Association coincides with adjacency in the closure.
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            CHECK(associated(d, u, v) == d.closed.adjacent(u, v));

    CHECK(frontier_neighborhood_check(d).ok);
    CHECK(common_neighbor_bound_check(d).ok);
}

}  // namespace

TEST_CASE("regions of the two-triangle member 3,3,3") {
    const Graph g = brousek(BrousekSpec::parse("3,3,3")).graph;
    const RegionDecomposition d = decompose(g);
    const std::vector<VertexSet> expected = {{0, 1, 2}, {0, 6}, {1, 7}, {2, 8},
                                             {3, 4, 5}, {3, 6}, {4, 7}, {5, 8}};
    CHECK(d.regions == expected);
    for (int v = 0; v < 9; ++v) CHECK(d.is_frontier(v));
    check_decomposition_invariants(g);
}

TEST_CASE("regions of the two-clique member k=6") {
    const Graph g = fig2(6).graph;  // a=0..5, b=6..11, m=12..14
    const RegionDecomposition d = decompose(g);
    CHECK(d.regions.size() == 8);
    CHECK(d.regions.front() == VertexSet{0, 1, 2, 3, 4, 5});
    // Clique vertices not on a connector are interior; everyone else borders
    // two regions.
    for (int v : {3, 4, 5, 9, 10, 11}) CHECK(d.is_interior(v));
    for (int v : {0, 1, 2, 6, 7, 8, 12, 13, 14}) CHECK(d.is_frontier(v));
    check_decomposition_invariants(g);
}

TEST_CASE("regions of small standard graphs") {
    {
        const RegionDecomposition d = decompose(complete_graph(4));
        CHECK(d.regions == std::vector<VertexSet>{{0, 1, 2, 3}});
        for (int v = 0; v < 4; ++v) CHECK(d.is_interior(v));
    }
    {
        const RegionDecomposition d = decompose(cycle_graph(4));
        CHECK(d.regions ==
              std::vector<VertexSet>{{0, 1}, {0, 3}, {1, 2}, {2, 3}});
        for (int v = 0; v < 4; ++v) CHECK(d.is_frontier(v));
    }
    {
        const RegionDecomposition d = decompose(Graph(1));
        CHECK(d.regions == std::vector<VertexSet>{{0}});
        CHECK(d.is_interior(0));
    }
    {
        // A diamond closes to K4 first.
        Graph diamond(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
        const RegionDecomposition d = decompose(diamond);
        CHECK(d.regions == std::vector<VertexSet>{{0, 1, 2, 3}});
        CHECK(d.base == diamond);
    }
    CHECK_THROWS_AS(decompose(Graph(4, {{0, 1}, {0, 2}, {0, 3}})), ClawError);
}

TEST_CASE("region paths") {
    // Adjacent associated pair: the edge itself.
    const Graph g333 = brousek(BrousekSpec::parse("3,3,3")).graph;
    const RegionDecomposition d333 = decompose(g333);
    CHECK(region_path(d333, 0, 1) == VertexSet{0, 1});
    CHECK(region_path(d333, 0, 6) == VertexSet{0, 6});
    CHECK_THROWS_AS(region_path(d333, 0, 3), std::invalid_argument);  // not associated

    // Diamond: 2 and 3 become associated only after closing; the path runs
    // through the lex-least interior vertex of the shared region.
    Graph diamond(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    CHECK(region_path(decompose(diamond), 2, 3) == VertexSet{2, 0, 3});

    // Fan: path 0-1-2-3 plus an apex joined to everything; it closes to K5.
    // 0 and 3 connect fastest through the apex, while 0 and 2 have two
    // shortest routes and the lexicographically smaller one wins.
    Graph fan(5, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {1, 4}, {2, 4}, {3, 4}});
    CHECK(region_path(decompose(fan), 0, 3) == VertexSet{0, 4, 3});
    CHECK(region_path(decompose(fan), 0, 2) == VertexSet{0, 1, 2});
}

TEST_CASE("region paths are induced and interior on random closures") {
    std::mt19937_64 rng(616);
    for (int trial = 0; trial < 120; ++trial) {
        const Graph g = sample_claw_free(rng, 4, 10);
        const RegionDecomposition d = decompose(g);
        for (int u = 0; u < g.order(); ++u)
            for (int v = u + 1; v < g.order(); ++v) {
                if (!associated(d, u, v)) continue;
                const VertexSet path = region_path(d, u, v);
                REQUIRE(path.size() >= 2);
                CHECK(path.front() == u);
                CHECK(path.back() == v);
                // Induced in the base graph.
                for (std::size_t i = 0; i < path.size(); ++i)
                    for (std::size_t j = i + 1; j < path.size(); ++j)
                        CHECK(d.base.adjacent(path[i], path[j]) == (j == i + 1));
                // Internal vertices are interior to a region shared by u and v.
                for (std::size_t i = 1; i + 1 < path.size(); ++i) {
                    CHECK(d.is_interior(path[i]));
                    const int r = d.membership[static_cast<std::size_t>(path[i])].front();
                    CHECK(std::find(d.membership[static_cast<std::size_t>(u)].begin(),
                                    d.membership[static_cast<std::size_t>(u)].end(),
                                    r) != d.membership[static_cast<std::size_t>(u)].end());
                    CHECK(std::find(d.membership[static_cast<std::size_t>(v)].begin(),
                                    d.membership[static_cast<std::size_t>(v)].end(),
                                    r) != d.membership[static_cast<std::size_t>(v)].end());
                }
            }
    }
}

TEST_CASE("decomposition invariants hold on random claw-free graphs") {
    std::mt19937_64 rng(617);
    for (int trial = 0; trial < 150; ++trial) check_decomposition_invariants(sample_claw_free(rng, 4, 12));
}

TEST_CASE("preimage of small standard graphs") {
    // K3 is the line graph of the claw.
    CHECK(are_isomorphic(preimage(decompose(complete_graph(3))),
                         make_pattern(PatternKind::Claw).graph));
    // P3 is the line graph of P4.
    Graph p3(3, {{0, 1}, {1, 2}});
    Graph p4(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(are_isomorphic(preimage(decompose(p3)), p4));
    // C5 is its own line graph.
    CHECK(are_isomorphic(preimage(decompose(cycle_graph(5))), cycle_graph(5)));
    // A single vertex is the line graph of a single edge.
    CHECK(are_isomorphic(preimage(decompose(Graph(1))), complete_graph(2)));
}

TEST_CASE("preimage of the two-triangle member 3,3,3 is the theta graph") {
    const Graph g = brousek(BrousekSpec::parse("3,3,3")).graph;
    const Graph h = preimage(decompose(g));
    CHECK(h.order() == 8);
    CHECK(h.edge_count() == 9);
    CHECK(is_free(h, make_pattern(PatternKind::Cycle3)));
    std::multiset<int> degrees;
    for (int v = 0; v < h.order(); ++v) degrees.insert(h.degree(v));
    CHECK(degrees == std::multiset<int>{2, 2, 2, 2, 2, 2, 3, 3});
    CHECK(are_isomorphic(line_graph(h).graph, g));
}

TEST_CASE("preimage reconstructs the closure on random claw-free graphs") {
    const Pattern triangle = make_pattern(PatternKind::Cycle3);
    std::mt19937_64 rng(618);
    for (int trial = 0; trial < 120; ++trial) {
        const Graph g = sample_claw_free(rng, 4, 12);
        const RegionDecomposition d = decompose(g);
        const Graph h = preimage(d);
        CAPTURE(encode_graph6(g));
        CHECK(is_free(h, triangle));
        CHECK(h.edge_count() == d.closed.order());
        REQUIRE(d.closed.order() <= 16);
        CHECK(are_isomorphic(line_graph(h).graph, d.closed));
    }
}
