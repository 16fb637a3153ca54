#ifndef CLAWHAM_PATTERNS_HPP
#define CLAWHAM_PATTERNS_HPP

#include <string>
#include <string_view>

#include "clawham/graph.hpp"

namespace clawham {

enum class PatternKind { Path, Cycle3, Z, Bull, Net, Wounded, Claw };

// A fixed small graph searched for as an induced subgraph.  end_vertices
// are its degree-one vertices, the ones whose host images carry the degree
// conditions checked by phi_holds.
struct Pattern {
    PatternKind kind;
    int param;  // path length (vertices) for Path, tail length for Z, else 0
    Graph graph;
    VertexSet end_vertices;
    std::string name;
};

// Path(i) needs i >= 2; Z(i) needs i >= 1.  Vertex layout is documented per
// kind: paths are 0..i-1 in order; triangle-based patterns put the triangle
// on 0,1,2 and append pendant vertices (see make_pattern's definition).
Pattern make_pattern(PatternKind kind, int param = 0);

// Names accepted on the command line: P3..P9, C3, Z1..Z6, B, N, W, claw
// (case-insensitive).  Throws std::invalid_argument otherwise.
Pattern pattern_from_name(std::string_view name);

// Degree-one vertices of an arbitrary graph, ascending.
VertexSet end_vertices(const Graph& g);

enum class SearchMode { First, All };

// Induced embeddings of p.graph into host.  Embeddings that agree on both
// the image set and the image of the end-vertex set are collapsed to one
// representative, so automorphisms of p do not inflate the result.  First
// mode stops at the first embedding found.
std::vector<Embedding> find_induced(const Graph& host, const Pattern& p, SearchMode mode);

// True iff host has no induced copy of p.graph.
bool is_free(const Graph& host, const Pattern& p);

// True iff some induced embedding of p maps one of p's end vertices onto v.
bool is_phi_end_vertex(const Graph& host, const Pattern& p, int v);

// All host vertices that receive an end-vertex role in some induced
// embedding of p, ascending.
VertexSet phi_end_vertex_set(const Graph& host, const Pattern& p);

struct PhiResult {
    bool holds = true;
    int violating_vertex = -1;  // set when holds is false
    int violating_degree = -1;
};

// The end-degree condition: every vertex in phi_end_vertex_set(host, p)
// satisfies 3 * d(v) >= n + k (exact integer arithmetic).  On failure the
// lowest violating vertex is reported.
PhiResult phi_holds(const Graph& host, const Pattern& p, int k);

}  // namespace clawham

#endif  // CLAWHAM_PATTERNS_HPP
