#include "clawham/regions.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "clawham/closure.hpp"
#include "clawham/families.hpp"

namespace clawham {

namespace {

VertexSet mask_to_set(std::uint64_t mask) {
    VertexSet out;
    while (mask) {
        out.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return out;
}

// Connected components of the subgraph induced on `mask`.
std::vector<std::uint64_t> mask_components(const Graph& g, std::uint64_t mask) {
    std::vector<std::uint64_t> comps;
    while (mask) {
        std::uint64_t comp = mask & (~mask + 1);
        std::uint64_t frontier = comp;
        while (frontier) {
            std::uint64_t next = 0;
            for (std::uint64_t m = frontier; m; m &= m - 1)
                next |= g.neighbors(std::countr_zero(m));
            next &= mask & ~comp;
            comp |= next;
            frontier = next;
        }
        comps.push_back(comp);
        mask &= ~comp;
    }
    return comps;
}

bool mask_is_clique(const Graph& g, std::uint64_t mask) {
    for (std::uint64_t m = mask; m; m &= m - 1) {
        const int u = std::countr_zero(m);
        if ((g.neighbors(u) & mask) != (mask & ~(1ull << u))) return false;
    }
    return true;
}

int common_region(const RegionDecomposition& d, int u, int v) {
    for (int r : d.membership[static_cast<std::size_t>(u)])
        for (int s : d.membership[static_cast<std::size_t>(v)])
            if (r == s) return r;
    return -1;
}

void check_vertex_pair(const RegionDecomposition& d, int u, int v, const char* op) {
    if (u < 0 || u >= d.base.order() || v < 0 || v >= d.base.order())
        throw std::invalid_argument(std::string(op) + ": vertex out of range");
    if (u == v) throw std::invalid_argument(std::string(op) + ": vertices must be distinct");
}

}  // namespace

RegionDecomposition decompose(const Graph& g) {
    RegionDecomposition d;
    d.base = g;
    d.closed = closure(g).final;

    std::set<std::uint64_t> clique_masks;
    for (int v = 0; v < d.closed.order(); ++v) {
        const std::uint64_t nb = d.closed.neighbors(v);
        if (nb == 0) {
            clique_masks.insert(1ull << v);
            continue;
        }
        const auto comps = mask_components(d.closed, nb);
        if (comps.size() > 2 || !std::all_of(comps.begin(), comps.end(), [&](std::uint64_t c) {
                return mask_is_clique(d.closed, c);
            }))
            throw std::logic_error(
                "decompose: closed neighborhood is not a union of at most two cliques");
        for (std::uint64_t c : comps) clique_masks.insert(c | (1ull << v));
    }

    d.regions.reserve(clique_masks.size());
    for (std::uint64_t mask : clique_masks) d.regions.push_back(mask_to_set(mask));
    std::sort(d.regions.begin(), d.regions.end());

    d.membership.assign(static_cast<std::size_t>(g.order()), {});
    for (std::size_t r = 0; r < d.regions.size(); ++r)
        for (int v : d.regions[r]) d.membership[static_cast<std::size_t>(v)].push_back(static_cast<int>(r));
    d.interior.assign(static_cast<std::size_t>(g.order()), false);
    for (int v = 0; v < g.order(); ++v) {
        const std::size_t count = d.membership[static_cast<std::size_t>(v)].size();
        if (count < 1 || count > 2)
            throw std::logic_error("decompose: vertex lies in " + std::to_string(count) +
                                   " regions (expected 1 or 2)");
        d.interior[static_cast<std::size_t>(v)] = count == 1;
    }
    return d;
}

bool associated(const RegionDecomposition& d, int u, int v) {
    check_vertex_pair(d, u, v, "associated");
    return common_region(d, u, v) >= 0;
}

VertexSet region_path(const RegionDecomposition& d, int u, int v) {
    check_vertex_pair(d, u, v, "region_path");
    const int r = common_region(d, u, v);
    if (r < 0) throw std::invalid_argument("region_path: vertices are not associated");
    if (d.base.adjacent(u, v)) return {u, v};

    std::uint64_t allowed = (1ull << u) | (1ull << v);
    for (int w : d.regions[static_cast<std::size_t>(r)])
        if (d.is_interior(w)) allowed |= 1ull << w;

    // Distances to v within the allowed set, then a greedy lowest-vertex
    // walk from u picks the lexicographically least shortest sequence.
    const int n = d.base.order();
    std::vector<int> dist(static_cast<std::size_t>(n), -1);
    dist[static_cast<std::size_t>(v)] = 0;
    std::uint64_t frontier = 1ull << v;
    int level = 0;
    while (frontier) {
        std::uint64_t next = 0;
        for (std::uint64_t m = frontier; m; m &= m - 1)
            next |= d.base.neighbors(std::countr_zero(m));
        next &= allowed;
        ++level;
        std::uint64_t fresh = 0;
        for (std::uint64_t m = next; m; m &= m - 1) {
            const int w = std::countr_zero(m);
            if (dist[static_cast<std::size_t>(w)] < 0) {
                dist[static_cast<std::size_t>(w)] = level;
                fresh |= 1ull << w;
            }
        }
        frontier = fresh;
    }
    if (dist[static_cast<std::size_t>(u)] < 0)
        throw std::logic_error("region_path: no induced path through interior vertices");

    VertexSet path{u};
    int cur = u;
    while (cur != v) {
        const int want = dist[static_cast<std::size_t>(cur)] - 1;
        std::uint64_t cand = d.base.neighbors(cur) & allowed;
        int chosen = -1;
        for (std::uint64_t m = cand; m; m &= m - 1) {
            const int w = std::countr_zero(m);
            if (dist[static_cast<std::size_t>(w)] == want) {
                chosen = w;
                break;
            }
        }
        path.push_back(chosen);
        cur = chosen;
    }
    return path;
}

DissociatedPairCheck common_neighbor_bound_check(const RegionDecomposition& d) {
    const int n = d.base.order();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (common_region(d, u, v) >= 0) continue;
            const int shared = std::popcount(d.base.neighbors(u) & d.base.neighbors(v));
            if (shared > 2) return {false, u, v, shared};
        }
    return {};
}

Graph preimage(const RegionDecomposition& d) {
    const int r = static_cast<int>(d.regions.size());
    int interior_count = 0;
    for (int v = 0; v < d.base.order(); ++v)
        if (d.is_interior(v)) ++interior_count;
    Graph h(r + interior_count);
    int pendant = r;
    for (int v = 0; v < d.base.order(); ++v) {
        const auto& member = d.membership[static_cast<std::size_t>(v)];
        if (member.size() == 2) {
            if (h.adjacent(member[0], member[1]))
                throw std::logic_error("preimage: two frontier vertices share both regions");
            h.add_edge(member[0], member[1]);
        } else {
            h.add_edge(member[0], pendant++);
        }
    }

    // The vertices of the closure correspond to the edges of h, so the
    // counts must line up, h must be triangle-free, and its line graph must
    // be the closure again.
    if (h.edge_count() != d.closed.order())
        throw std::logic_error("preimage: edge count does not match the closure order");
    for (int a = 0; a < h.order(); ++a)
        for (int b = a + 1; b < h.order(); ++b) {
            if (!h.adjacent(a, b)) continue;
            if (h.neighbors(a) & h.neighbors(b))
                throw std::logic_error("preimage: root graph contains a triangle");
        }
    if (d.closed.order() > 0) {
        const Graph check = line_graph(h).graph;
        if (d.closed.order() <= 16) {
            if (!are_isomorphic(check, d.closed))
                throw std::logic_error("preimage: line graph differs from the closure");
        } else {
            auto degrees = [](const Graph& g) {
                std::vector<int> ds(static_cast<std::size_t>(g.order()));
                for (int v = 0; v < g.order(); ++v) ds[static_cast<std::size_t>(v)] = g.degree(v);
                std::sort(ds.begin(), ds.end());
                return ds;
            };
            if (check.order() != d.closed.order() || check.edge_count() != d.closed.edge_count() ||
                degrees(check) != degrees(d.closed))
                throw std::logic_error("preimage: line graph differs from the closure");
        }
    }
    return h;
}

FrontierCheck frontier_neighborhood_check(const RegionDecomposition& d) {
    for (int v = 0; v < d.base.order(); ++v) {
        if (d.is_interior(v)) continue;
        for (int r : d.membership[static_cast<std::size_t>(v)]) {
            std::uint64_t region_mask = 0;
            for (int w : d.regions[static_cast<std::size_t>(r)]) region_mask |= 1ull << w;
            const std::uint64_t in_region = d.base.neighbors(v) & region_mask;
            if (!mask_is_clique(d.base, in_region)) return {false, v, r};
            bool has_interior_neighbor = false;
            for (std::uint64_t m = in_region; m; m &= m - 1)
                if (d.is_interior(std::countr_zero(m))) has_interior_neighbor = true;
            if (has_interior_neighbor) continue;
            bool region_has_interior = false;
            for (int w : d.regions[static_cast<std::size_t>(r)])
                if (d.is_interior(w)) region_has_interior = true;
            if (region_has_interior || !mask_is_clique(d.base, region_mask))
                return {false, v, r};
        }
    }
    return {};
}

}  // namespace clawham
