#ifndef CLAWHAM_CYCLES_HPP
#define CLAWHAM_CYCLES_HPP

#include <optional>

#include "clawham/graph.hpp"

namespace clawham {

// A simple cycle given as its vertex sequence; consecutive vertices and the
// wrap-around pair are adjacent, and no vertex repeats.
struct CycleWitness {
    std::vector<int> vertices;
};

bool is_valid_cycle(const Graph& g, const CycleWitness& w);

// Exact hamiltonicity by backtracking from vertex 0 with lowest-index
// branching.  Prunes a branch when some unvisited vertex has fewer than two
// usable neighbors (degree-2 forcing) or when the unvisited part plus the
// path's two usable ends is disconnected.  Graphs of order < 3 have no
// cycle at all, so the result is empty for them.
std::optional<CycleWitness> hamilton_cycle(const Graph& g);

// Exact hamiltonicity by dynamic programming over vertex subsets
// (Held-Karp style reachability).  Independent of hamilton_cycle and used to
// cross-validate it.  Capped at order 24 (SizeError beyond).
bool hamiltonian_dp(const Graph& g);

// Number of vertices on a longest simple cycle, 0 when g is acyclic.
// Subset dynamic program, capped at order 16 (SizeError beyond).
int longest_cycle(const Graph& g);

// True iff denominator * d(v) >= n + shift for every vertex v.
// denominator must be 2 or 3: (0, 2) is the classical n/2 bound and
// (-2, 3) the (n-2)/3 bound.
bool degree_threshold_check(const Graph& g, int shift, int denominator);

}  // namespace clawham

#endif  // CLAWHAM_CYCLES_HPP
