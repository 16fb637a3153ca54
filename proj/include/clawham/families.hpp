#ifndef CLAWHAM_FAMILIES_HPP
#define CLAWHAM_FAMILIES_HPP

#include <map>
#include <optional>
#include <string>

#include "clawham/graph.hpp"

namespace clawham {

// A graph together with a role-name -> vertex-index table ("a1", "b2",
// "m3", "c1_2", "e(0,1)", ...).
struct LabeledGraph {
    Graph graph;
    std::map<std::string, int> labels;

    int label(const std::string& name) const;
};

// Connector choices for the two-triangle family: each slot is either a path
// on k >= 3 vertices (value k) or a triangle through a shared extra vertex
// (empty optional, written "T").
struct BrousekSpec {
    std::array<std::optional<int>, 3> x;

    static BrousekSpec paths(int k1, int k2, int k3);
    // Accepts forms like "3,T,5"; case-insensitive "T".
    static BrousekSpec parse(std::string_view text);
    std::string to_string() const;
    int total_order() const;  // 6 + one extra vertex per T + (k-2) per path
};

// Two disjoint triangles a1a2a3 and b1b2b3; slot i joins a_i to b_i either
// by a path a_i c_i^1 ... c_i^(k_i-2) b_i or, for "T", by a triangle
// a_i b_i c_i.  Vertices: a1..a3 = 0..2, b1..b3 = 3..5, connector interiors
// appended in slot order.
LabeledGraph brousek(const BrousekSpec& spec);

// Two k-cliques a1..ak and b1..bk plus middle vertices m1,m2,m3 with edges
// a_i m_i and m_i b_i (i = 1..3).  Requires k >= 3; order is 2k + 3.
LabeledGraph fig2(int k);

// Line graph of h: one vertex per edge of h (labeled "e(u,v)"), adjacent
// when the edges share an endpoint.  h must have at least one edge, and at
// most 64 edges so the result fits the bit-row representation.
LabeledGraph line_graph(const Graph& h);

}  // namespace clawham

#endif  // CLAWHAM_FAMILIES_HPP
