#include <algorithm>
#include <random>
#include <vector>

#include "clawham/cycles.hpp"
#include "clawham/families.hpp"
#include "clawham/graph.hpp"
#include "doctest.h"

using namespace clawham;

namespace {

Graph path_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle_graph(int n) {
    Graph g = path_graph(n);
    g.add_edge(0, n - 1);
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
    return g;
}

Graph petersen() {
    Graph g(10);
    for (int v = 0; v < 5; ++v) {
        g.add_edge(v, (v + 1) % 5);          // outer cycle
        g.add_edge(5 + v, 5 + (v + 2) % 5);  // inner pentagram
        g.add_edge(v, 5 + v);                // spokes
    }
    return g;
}

// Reference longest cycle: every subset, every rotation-fixed permutation.
int oracle_longest_cycle(const Graph& g) {
    const int n = g.order();
    int best = 0;
    for (std::uint64_t subset = 0; subset < (1ull << n); ++subset) {
        const int size = __builtin_popcountll(subset);
        if (size < 3 || size <= best) continue;
        std::vector<int> verts;
        for (int v = 0; v < n; ++v)
            if (subset >> v & 1) verts.push_back(v);
        // Fix verts[0] as the anchor; permute the rest.
        std::vector<int> rest(verts.begin() + 1, verts.end());
        std::sort(rest.begin(), rest.end());
        do {
            bool ok = g.adjacent(verts[0], rest.front()) && g.adjacent(verts[0], rest.back());
            for (std::size_t i = 0; ok && i + 1 < rest.size(); ++i)
                ok = g.adjacent(rest[i], rest[i + 1]);
            if (ok) {
                best = size;
                break;
            }
        } while (std::next_permutation(rest.begin(), rest.end()));
    }
    return best;
}

void check_witness(const Graph& g) {
    const auto w = hamilton_cycle(g);
    REQUIRE(w.has_value());
    CHECK(static_cast<int>(w->vertices.size()) == g.order());
    CHECK(is_valid_cycle(g, *w));
}

}  // namespace

TEST_CASE("hamiltonicity of standard graphs") {
    check_witness(complete_graph(4));
    check_witness(cycle_graph(5));
    check_witness(complete_bipartite(3, 3));
    check_witness(cycle_graph(3));

    CHECK_FALSE(hamilton_cycle(path_graph(4)).has_value());
    CHECK_FALSE(hamilton_cycle(complete_bipartite(2, 3)).has_value());
    CHECK_FALSE(hamilton_cycle(petersen()).has_value());
    CHECK_FALSE(hamilton_cycle(Graph(2)).has_value());
    CHECK_FALSE(hamilton_cycle(complete_graph(2)).has_value());
    CHECK_FALSE(hamilton_cycle(Graph(0)).has_value());

    CHECK(hamiltonian_dp(complete_graph(4)));
    CHECK(hamiltonian_dp(cycle_graph(5)));
    CHECK_FALSE(hamiltonian_dp(petersen()));
    CHECK_FALSE(hamiltonian_dp(path_graph(4)));
}

TEST_CASE("longest cycle on standard graphs") {
    CHECK(longest_cycle(path_graph(5)) == 0);
    CHECK(longest_cycle(Graph(3)) == 0);
    CHECK(longest_cycle(cycle_graph(7)) == 7);
    CHECK(longest_cycle(complete_bipartite(2, 3)) == 4);
    CHECK(longest_cycle(petersen()) == 9);  // hypohamiltonian

    // A tree plus one extra edge has exactly one cycle.
    Graph g(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {2, 5}});
    CHECK(longest_cycle(g) == 4);  // 2-3-4-5
}

TEST_CASE("the two-triangle family member 3,3,3 has circumference 8") {
    const Graph g = brousek(BrousekSpec::parse("3,3,3")).graph;
    CHECK_FALSE(hamilton_cycle(g).has_value());
    CHECK_FALSE(hamiltonian_dp(g));
    CHECK(longest_cycle(g) == 8);
    // One explicit 8-cycle: around both triangles using two of the three
    // connector interiors (layout: a=0..2, b=3..5, interiors 6,7,8).
    const CycleWitness eight{{2, 0, 6, 3, 5, 4, 7, 1}};
    CHECK(is_valid_cycle(g, eight));
}

TEST_CASE("cycle witness validation") {
    const Graph c5 = cycle_graph(5);
    CHECK(is_valid_cycle(c5, CycleWitness{{0, 1, 2, 3, 4}}));
    CHECK(is_valid_cycle(c5, CycleWitness{{2, 1, 0, 4, 3}}));
    CHECK_FALSE(is_valid_cycle(c5, CycleWitness{{0, 1, 2, 3}}));     // 3-0 missing
    CHECK_FALSE(is_valid_cycle(c5, CycleWitness{{0, 1, 2, 2, 4}}));  // repeat
    CHECK_FALSE(is_valid_cycle(c5, CycleWitness{{0, 1}}));           // too short
    CHECK_FALSE(is_valid_cycle(c5, CycleWitness{{0, 1, 7, 3, 4}}));  // out of range
    CHECK(is_valid_cycle(complete_graph(4), CycleWitness{{1, 3, 2}}));
}

TEST_CASE("solvers and the brute-force oracle agree exhaustively at n<=5") {
    for (int n = 0; n <= 5; ++n) {
        enumerate_labeled(n, {}, [&](const Graph& g) {
            const auto witness = hamilton_cycle(g);
            if (witness) CHECK(is_valid_cycle(g, *witness));
            const int oracle = oracle_longest_cycle(g);
            CHECK(longest_cycle(g) == oracle);
            CHECK(witness.has_value() == (oracle == n && n >= 3));
            CHECK(hamiltonian_dp(g) == witness.has_value());
        });
    }
}

TEST_CASE("solvers and the brute-force oracle agree on random graphs n=6..8") {
    std::mt19937_64 rng(5150);
    for (int trial = 0; trial < 250; ++trial) {
        const int n = 6 + static_cast<int>(rng() % 3);
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 3 != 0) g.add_edge(u, v);
        const int oracle = oracle_longest_cycle(g);
        CAPTURE(encode_graph6(g));
        CHECK(longest_cycle(g) == oracle);
        CHECK(hamilton_cycle(g).has_value() == (oracle == n));
        CHECK(hamiltonian_dp(g) == (oracle == n));
    }
}

TEST_CASE("solver size caps") {
    CHECK_THROWS_AS(hamiltonian_dp(Graph(25)), SizeError);
    CHECK_THROWS_AS(longest_cycle(Graph(17)), SizeError);
    CHECK_NOTHROW(longest_cycle(Graph(16)));
    CHECK(hamiltonian_dp(cycle_graph(24)));
    CHECK_FALSE(hamilton_cycle(Graph(30)).has_value());  // backtracking has no cap
}

TEST_CASE("degree thresholds use exact integer arithmetic") {
    // d >= n/2: holds for C4 (2 >= 2), fails for C5 (2 < 2.5).
    CHECK(degree_threshold_check(cycle_graph(4), 0, 2));
    CHECK_FALSE(degree_threshold_check(cycle_graph(5), 0, 2));
    // 3d >= n - 2 at the boundary: n=8, d=2 gives 6 >= 6.
    CHECK(degree_threshold_check(cycle_graph(8), -2, 3));
    CHECK_FALSE(degree_threshold_check(cycle_graph(9), -2, 3));
    CHECK(degree_threshold_check(Graph(0), 5, 3));  // vacuous on the empty graph
}
