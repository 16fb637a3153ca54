#ifndef CLAWHAM_REGIONS_HPP
#define CLAWHAM_REGIONS_HPP

#include "clawham/graph.hpp"

namespace clawham {

// The maximal cliques ("regions") of the closure of a claw-free graph.
// Every vertex lies in one region (interior) or two (frontier).  Regions
// are listed with sorted vertex lists, ordered lexicographically.
struct RegionDecomposition {
    Graph base;
    Graph closed;
    std::vector<VertexSet> regions;
    std::vector<std::vector<int>> membership;  // per vertex, ascending region ids
    std::vector<bool> interior;                // interior[v] iff v lies in one region

    bool is_interior(int v) const { return interior[static_cast<std::size_t>(v)]; }
    bool is_frontier(int v) const { return !interior[static_cast<std::size_t>(v)]; }
};

// Computes the closure and reads its maximal cliques off the closed
// neighborhoods (each splits into at most two cliques), which avoids a
// general clique enumeration.  Requires a claw-free input.
RegionDecomposition decompose(const Graph& g);

// True iff u and v share a region; coincides with adjacency in the closure.
// u != v required.
bool associated(const RegionDecomposition& d, int u, int v);

// An induced path from u to v in the base graph whose internal vertices are
// interior vertices of the region shared by u and v; [u, v] when the edge
// exists in the base graph.  Shortest, ties broken by lexicographically
// least vertex sequence.  Requires associated(d, u, v).
VertexSet region_path(const RegionDecomposition& d, int u, int v);

struct DissociatedPairCheck {
    bool ok = true;
    int u = -1, v = -1;  // first violating pair when !ok
    int common_neighbors = 0;
};

// Confirms |N(u) cap N(v)| <= 2 in the base graph for every pair of
// vertices that do not share a region.
DissociatedPairCheck common_neighbor_bound_check(const RegionDecomposition& d);

// The triangle-free root of the closure: one vertex per region plus one
// pendant vertex per interior vertex (pendants appended after the region
// vertices, in index order of their interior vertex).  Its line graph is
// isomorphic to the closure; the construction validates that before
// returning (exact isomorphism up to order 16, counts and degree multisets
// beyond).
Graph preimage(const RegionDecomposition& d);

struct FrontierCheck {
    bool ok = true;
    int vertex = -1;  // first violating (vertex, region) when !ok
    int region = -1;
};

// For every frontier vertex v and each region R containing it: N(v) cap R
// is a clique in the base graph, and v has an interior neighbor in R unless
// R is complete in the base graph and has no interior vertices.
FrontierCheck frontier_neighborhood_check(const RegionDecomposition& d);

}  // namespace clawham

#endif  // CLAWHAM_REGIONS_HPP
