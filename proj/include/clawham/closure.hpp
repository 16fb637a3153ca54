#ifndef CLAWHAM_CLOSURE_HPP
#define CLAWHAM_CLOSURE_HPP

#include <cstdint>

#include "clawham/graph.hpp"

namespace clawham {

// One completion step: the vertex whose neighborhood was completed and the
// edges that were new at that point.
struct ClosureStep {
    int eligible_vertex;
    std::vector<std::pair<int, int>> added_edges;
};

struct ClosureTrace {
    Graph initial;
    Graph final;
    std::vector<ClosureStep> steps;
};

// Which eligible vertex to complete next.  The result is the same graph for
// every policy; only the trace differs.
enum class EligiblePolicy { LowestIndex, HighestIndex, SeededRandom };

// Vertices whose neighborhood induces a connected non-complete graph,
// ascending.  Requires a claw-free input (ClawError otherwise).
VertexSet eligible_vertices(const Graph& g);

// g plus all missing edges inside N(x).  x must currently be eligible.
Graph complete_at(const Graph& g, int x);

// Iterated neighborhood completion until no vertex is eligible.
ClosureTrace closure(const Graph& g);
ClosureTrace closure_with_policy(const Graph& g, EligiblePolicy policy, std::uint64_t seed = 0);

// True iff no vertex is eligible.  Requires a claw-free input.
bool is_closed(const Graph& g);

}  // namespace clawham

#endif  // CLAWHAM_CLOSURE_HPP
