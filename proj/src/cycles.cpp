#include "clawham/cycles.hpp"

#include <algorithm>
#include <bit>

namespace clawham {

bool is_valid_cycle(const Graph& g, const CycleWitness& w) {
    const auto& seq = w.vertices;
    if (seq.size() < 3) return false;
    std::uint64_t seen = 0;
    for (int v : seq) {
        if (v < 0 || v >= g.order()) return false;
        if ((seen >> v) & 1u) return false;
        seen |= 1ull << v;
    }
    for (std::size_t i = 0; i < seq.size(); ++i)
        if (!g.adjacent(seq[i], seq[(i + 1) % seq.size()])) return false;
    return true;
}

namespace {

struct HamiltonSearch {
    const Graph& g;
    std::uint64_t all;
    std::vector<int> path;
    std::uint64_t visited;

    explicit HamiltonSearch(const Graph& graph)
        : g(graph), all(all_vertices_mask(graph.order())), visited(1) {
        path.reserve(static_cast<std::size_t>(graph.order()));
        path.push_back(0);
    }

    // The cycle still has to run last -> (rest) -> 0, so every unvisited
    // vertex needs two neighbors among {unvisited, last, 0}, and that vertex
    // set must be connected.
    bool feasible(int last) const {
        const std::uint64_t rest = all & ~visited;
        const std::uint64_t usable = rest | (1ull << last) | 1ull;
        for (std::uint64_t m = rest; m; m &= m - 1) {
            const int u = std::countr_zero(m);
            if (std::popcount(g.neighbors(u) & usable) < 2) return false;
        }
        return mask_connected(g, usable);
    }

    bool extend(int last) {
        if (visited == all) return g.adjacent(last, 0);
        if (!feasible(last)) return false;
        for (std::uint64_t m = g.neighbors(last) & ~visited; m; m &= m - 1) {
            const int next = std::countr_zero(m);
            visited |= 1ull << next;
            path.push_back(next);
            if (extend(next)) return true;
            path.pop_back();
            visited &= ~(1ull << next);
        }
        return false;
    }
};

}  // namespace

std::optional<CycleWitness> hamilton_cycle(const Graph& g) {
    const int n = g.order();
    if (n < 3) return std::nullopt;
    if (g.min_degree() < 2) return std::nullopt;
    if (!is_connected(g)) return std::nullopt;
    HamiltonSearch search(g);
    if (!search.extend(0)) return std::nullopt;
    return CycleWitness{std::move(search.path)};
}

bool hamiltonian_dp(const Graph& g) {
    const int n = g.order();
    if (n > 24) throw SizeError("hamiltonian_dp supports orders up to 24");
    if (n < 3) return false;
    if (g.min_degree() < 2) return false;

    // ends[mask >> 1] = endpoint set of simple paths that start at vertex 0
    // and visit exactly `mask` (bit 0 always set).
    std::vector<std::uint32_t> ends(1ull << (n - 1), 0);
    ends[0] = 1;
    const std::uint64_t full = all_vertices_mask(n);
    for (std::uint64_t idx = 0; idx < ends.size(); ++idx) {
        std::uint32_t e = ends[idx];
        if (!e) continue;
        const std::uint64_t mask = (idx << 1) | 1;
        if (mask == full) continue;
        while (e) {
            const int v = std::countr_zero(e);
            e &= e - 1;
            for (std::uint64_t ext = g.neighbors(v) & ~mask; ext; ext &= ext - 1) {
                const int u = std::countr_zero(ext);
                ends[(mask | (1ull << u)) >> 1] |= 1u << u;
            }
        }
    }
    const std::uint32_t last = ends[(full >> 1)];
    return (last & static_cast<std::uint32_t>(g.neighbors(0)) & ~1u) != 0;
}

int longest_cycle(const Graph& g) {
    const int n = g.order();
    if (n > 16) throw SizeError("longest_cycle supports orders up to 16");
    if (n < 3) return 0;

    // ends[mask] = endpoint set of simple paths that visit exactly `mask`
    // and start at the lowest vertex of `mask`.
    std::vector<std::uint16_t> ends(1ull << n, 0);
    for (int v = 0; v < n; ++v) ends[1ull << v] = static_cast<std::uint16_t>(1u << v);
    int best = 0;
    for (std::uint64_t mask = 1; mask < ends.size(); ++mask) {
        std::uint16_t e = ends[mask];
        if (!e) continue;
        const int start = std::countr_zero(mask);
        const int size = std::popcount(mask);
        if (size >= 3 && size > best &&
            (e & g.neighbors(start) & ~(1ull << start)))
            best = size;
        // Only extend to vertices above `start` so it stays the lowest.
        const std::uint64_t allowed = ~mask & ~((2ull << start) - 1);
        while (e) {
            const int v = std::countr_zero(e);
            e &= e - 1;
            for (std::uint64_t ext = g.neighbors(v) & allowed; ext; ext &= ext - 1)
                ends[mask | (1ull << std::countr_zero(ext))] |=
                    static_cast<std::uint16_t>(1u << std::countr_zero(ext));
        }
    }
    return best;
}

bool degree_threshold_check(const Graph& g, int shift, int denominator) {
    if (denominator != 2 && denominator != 3)
        throw std::invalid_argument("degree_threshold_check: denominator must be 2 or 3");
    const int n = g.order();
    for (int v = 0; v < n; ++v)
        if (denominator * g.degree(v) < n + shift) return false;
    return true;
}

}  // namespace clawham
