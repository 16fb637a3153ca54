#include "clawham/closure.hpp"

#include <bit>
#include <cassert>
#include <random>

namespace clawham {

namespace {

// Eligible test without the claw-free precondition check (callers below
// validate the input once up front).
bool eligible_unchecked(const Graph& g, int x) {
    const std::uint64_t nb = g.neighbors(x);
    if (std::popcount(nb) < 2) return false;  // empty or singleton: complete
    if (!mask_connected(g, nb)) return false;
    for (std::uint64_t m = nb; m; m &= m - 1) {
        const int u = std::countr_zero(m);
        if ((g.neighbors(u) & nb) != (nb & ~(1ull << u))) return true;  // connected, not complete
    }
    return false;
}

VertexSet eligible_unchecked_all(const Graph& g) {
    VertexSet out;
    for (int x = 0; x < g.order(); ++x)
        if (eligible_unchecked(g, x)) out.push_back(x);
    return out;
}

Graph complete_unchecked(const Graph& g, int x, std::vector<std::pair<int, int>>& added) {
    added.clear();
    Graph out = g;
    const std::uint64_t nb = g.neighbors(x);
    for (std::uint64_t mu = nb; mu; mu &= mu - 1) {
        const int u = std::countr_zero(mu);
        for (std::uint64_t mv = nb & ~((2ull << u) - 1); mv; mv &= mv - 1) {
            const int v = std::countr_zero(mv);
            if (!g.adjacent(u, v)) {
                out.add_edge(u, v);
                added.emplace_back(u, v);
            }
        }
    }
    return out;
}

}  // namespace

VertexSet eligible_vertices(const Graph& g) {
    require_claw_free(g);
    return eligible_unchecked_all(g);
}

Graph complete_at(const Graph& g, int x) {
    require_claw_free(g);
    if (x < 0 || x >= g.order()) throw std::invalid_argument("complete_at: vertex out of range");
    if (!eligible_unchecked(g, x))
        throw std::invalid_argument("complete_at: vertex " + std::to_string(x) +
                                    " is not eligible");
    std::vector<std::pair<int, int>> added;
    return complete_unchecked(g, x, added);
}

ClosureTrace closure_with_policy(const Graph& g, EligiblePolicy policy, std::uint64_t seed) {
    require_claw_free(g);
    ClosureTrace trace;
    trace.initial = g;
    trace.final = g;
    std::mt19937_64 rng(seed);
    for (;;) {
        const VertexSet eligible = eligible_unchecked_all(trace.final);
        if (eligible.empty()) break;
        std::size_t pick = 0;
        switch (policy) {
            case EligiblePolicy::LowestIndex: pick = 0; break;
            case EligiblePolicy::HighestIndex: pick = eligible.size() - 1; break;
            case EligiblePolicy::SeededRandom:
                pick = std::uniform_int_distribution<std::size_t>(0, eligible.size() - 1)(rng);
                break;
        }
        ClosureStep step;
        step.eligible_vertex = eligible[pick];
        trace.final = complete_unchecked(trace.final, step.eligible_vertex, step.added_edges);
        assert(is_claw_free(trace.final));  // completion preserves claw-freeness
        trace.steps.push_back(std::move(step));
    }
    return trace;
}

ClosureTrace closure(const Graph& g) {
    return closure_with_policy(g, EligiblePolicy::LowestIndex);
}

bool is_closed(const Graph& g) { return eligible_vertices(g).empty(); }

}  // namespace clawham
