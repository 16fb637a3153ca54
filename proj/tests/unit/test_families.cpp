#include <set>

#include "clawham/cycles.hpp"
#include "clawham/families.hpp"
#include "clawham/graph.hpp"
#include "clawham/patterns.hpp"
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

}  // namespace

TEST_CASE("two-triangle spec parsing and printing") {
    const BrousekSpec s1 = BrousekSpec::parse("3,3,3");
    CHECK(s1.to_string() == "3,3,3");
    CHECK(s1.total_order() == 9);

    const BrousekSpec s2 = BrousekSpec::parse("3,T,5");
    CHECK(s2.to_string() == "3,T,5");
    CHECK(s2.total_order() == 6 + 1 + 1 + 3);

    CHECK(BrousekSpec::parse("t,T,T").to_string() == "T,T,T");
    CHECK(BrousekSpec::parse(" 4 , 7 , 3 ").to_string() == "4,7,3");
    CHECK(BrousekSpec::paths(3, 4, 5).to_string() == "3,4,5");
    CHECK(BrousekSpec::parse("T,T,T").total_order() == 9);

    for (const char* bad : {"", "3,3", "3,3,3,3", "3,3,2", "3,3,x", "0,3,3", "-3,3,3", "T,T"})
        CHECK_THROWS_AS(BrousekSpec::parse(bad), std::invalid_argument);
}

TEST_CASE("two-triangle member 3,3,3: layout, labels, structure") {
    const LabeledGraph lg = brousek(BrousekSpec::parse("3,3,3"));
    const Graph& g = lg.graph;
    CHECK(g.order() == 9);
    CHECK(g.edge_count() == 12);

    CHECK(lg.label("a1") == 0);
    CHECK(lg.label("a3") == 2);
    CHECK(lg.label("b1") == 3);
    CHECK(lg.label("c1_1") == 6);
    CHECK(lg.label("c3_1") == 8);

    // Both triangles present, connectors correct, nothing else.
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            CHECK(g.adjacent(i, j));
            CHECK(g.adjacent(3 + i, 3 + j));
        }
    for (int i = 0; i < 3; ++i) {
        CHECK(g.adjacent(i, 6 + i));
        CHECK(g.adjacent(3 + i, 6 + i));
        CHECK_FALSE(g.adjacent(i, 3 + i));
    }
    CHECK(is_claw_free(g));
    CHECK(is_two_connected(g));
}

TEST_CASE("triangle connectors add the a-b edge") {
    const LabeledGraph lg = brousek(BrousekSpec::parse("T,3,4"));
    const Graph& g = lg.graph;
    CHECK(g.order() == 6 + 1 + 1 + 2);
    const int a1 = lg.label("a1"), b1 = lg.label("b1"), c1 = lg.label("c1");
    CHECK(g.adjacent(a1, b1));  // triangle connector
    CHECK(g.adjacent(a1, c1));
    CHECK(g.adjacent(b1, c1));
    const int a2 = lg.label("a2"), b2 = lg.label("b2");
    CHECK_FALSE(g.adjacent(a2, b2));  // path connector of length 3
    CHECK(g.adjacent(a2, lg.label("c2_1")));
    CHECK(g.adjacent(b2, lg.label("c2_1")));
    // Path of length 4 in slot 3: a3 - c3_1 - c3_2 - b3.
    CHECK(g.adjacent(lg.label("a3"), lg.label("c3_1")));
    CHECK(g.adjacent(lg.label("c3_1"), lg.label("c3_2")));
    CHECK(g.adjacent(lg.label("c3_2"), lg.label("b3")));
    CHECK_FALSE(g.adjacent(lg.label("a3"), lg.label("c3_2")));
}

TEST_CASE("every two-triangle member is 2-connected, claw-free, non-hamiltonian") {
    for (const char* spec : {"3,3,3", "T,3,3", "T,T,3", "T,T,T", "3,4,5", "T,3,7", "4,4,4"}) {
        const Graph g = brousek(BrousekSpec::parse(spec)).graph;
        CAPTURE(spec);
        CHECK(g.order() >= 9);
        CHECK(is_claw_free(g));
        CHECK(is_two_connected(g));
        CHECK_FALSE(hamilton_cycle(g).has_value());
        CHECK_FALSE(hamiltonian_dp(g));
    }
}

TEST_CASE("two-clique family: structure and hand-built adjacency at k=4") {
    const LabeledGraph lg = fig2(4);
    const Graph& g = lg.graph;
    CHECK(g.order() == 11);
    CHECK(lg.label("a1") == 0);
    CHECK(lg.label("b1") == 4);
    CHECK(lg.label("m3") == 10);

    Graph expected(11);
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) {
            expected.add_edge(u, v);          // first clique
            expected.add_edge(4 + u, 4 + v);  // second clique
        }
    for (int i = 0; i < 3; ++i) {
        expected.add_edge(i, 8 + i);      // a_i - m_i
        expected.add_edge(4 + i, 8 + i);  // b_i - m_i
    }
    CHECK(g == expected);

    CHECK_THROWS_AS(fig2(2), std::invalid_argument);
}

TEST_CASE("two-clique family properties across k") {
    for (int k = 3; k <= 8; ++k) {
        const Graph g = fig2(k).graph;
        CAPTURE(k);
        CHECK(g.order() == 2 * k + 3);
        CHECK(is_claw_free(g));
        CHECK(is_two_connected(g));
        CHECK(g.min_degree() == 2);
        CHECK(g.max_degree() == k);
        CHECK_FALSE(hamiltonian_dp(g));
    }
    CHECK(are_isomorphic(fig2(3).graph, brousek(BrousekSpec::parse("3,3,3")).graph));
}

TEST_CASE("line graphs of standard graphs") {
    CHECK(are_isomorphic(line_graph(path_graph(4)).graph, path_graph(3)));
    CHECK(are_isomorphic(line_graph(cycle_graph(5)).graph, cycle_graph(5)));
    CHECK(are_isomorphic(line_graph(complete_graph(3)).graph, complete_graph(3)));

    Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(are_isomorphic(line_graph(star).graph, complete_graph(3)));

    // L(K4) is the octahedron: 6 vertices, 4-regular.
    const Graph lk4 = line_graph(complete_graph(4)).graph;
    CHECK(lk4.order() == 6);
    CHECK(lk4.edge_count() == 12);
    CHECK(lk4.min_degree() == 4);
    CHECK(lk4.max_degree() == 4);
    Graph octahedron(6);
    for (int u = 0; u < 6; ++u)
        for (int v = u + 1; v < 6; ++v)
            if (v != u + 3 || u >= 3) octahedron.add_edge(u, v);
    CHECK(are_isomorphic(lk4, octahedron));

    CHECK_THROWS_AS(line_graph(Graph(3)), std::invalid_argument);  // no edges, no line graph
}

TEST_CASE("line graph labels name the source edges in lexicographic order") {
    const LabeledGraph lg = line_graph(path_graph(3));
    CHECK(lg.graph.order() == 2);
    CHECK(lg.label("e(0,1)") == 0);
    CHECK(lg.label("e(1,2)") == 1);
    CHECK(lg.graph.adjacent(0, 1));
    CHECK_THROWS_AS(lg.label("e(0,2)"), std::invalid_argument);
}

TEST_CASE("line graphs are always claw-free") {
    std::set<std::string> seen;
    for (int n = 2; n <= 5; ++n) {
        enumerate_labeled(n, {}, [&](const Graph& h) {
            if (h.edge_count() == 0) return;
            const Graph lg = line_graph(h).graph;
            CHECK(is_claw_free(lg));
            CHECK(lg.order() == h.edge_count());
        });
    }
}
