#include "clawham/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace clawham {

FormatError::FormatError(const std::string& what, std::size_t byte_offset_)
    : std::runtime_error(what), byte_offset(byte_offset_) {}

ClawError::ClawError(const std::array<int, 4>& witness_)
    : std::domain_error("graph is not claw-free: induced claw with center " +
                        std::to_string(witness_[0]) + " and leaves " +
                        std::to_string(witness_[1]) + "," + std::to_string(witness_[2]) + "," +
                        std::to_string(witness_[3])),
      witness(witness_) {}

Graph::Graph(int n) { reset(n); }

Graph::Graph(int n, std::initializer_list<std::pair<int, int>> edges) {
    reset(n);
    for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::reset(int n) {
    if (n < 0) throw std::invalid_argument("graph order must be non-negative");
    if (n > max_order) throw SizeError("graph order exceeds the supported cap of 64");
    n_ = n;
    rows_.assign(static_cast<std::size_t>(n), 0);
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loops are not supported");
    rows_[static_cast<std::size_t>(u)] |= 1ull << v;
    rows_[static_cast<std::size_t>(v)] |= 1ull << u;
}

int Graph::edge_count() const {
    int twice = 0;
    for (std::uint64_t row : rows_) twice += std::popcount(row);
    return twice / 2;
}

VertexSet Graph::neighbor_list(int v) const {
    std::uint64_t m = neighbors(v);
    VertexSet out;
    out.reserve(static_cast<std::size_t>(std::popcount(m)));
    while (m) {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

int Graph::degree(int v) const { return std::popcount(neighbors(v)); }

int Graph::min_degree() const {
    int d = 0;
    bool first = true;
    for (std::uint64_t row : rows_) {
        int p = std::popcount(row);
        if (first || p < d) d = p;
        first = false;
    }
    return d;
}

int Graph::max_degree() const {
    int d = 0;
    for (std::uint64_t row : rows_) d = std::max(d, std::popcount(row));
    return d;
}

bool is_induced_embedding(const Graph& pattern, const Graph& host, const Embedding& e) {
    const int k = pattern.order();
    if (static_cast<int>(e.map.size()) != k) return false;
    std::uint64_t used = 0;
    for (int i = 0; i < k; ++i) {
        int hv = e.map[static_cast<std::size_t>(i)];
        if (hv < 0 || hv >= host.order()) return false;
        if ((used >> hv) & 1u) return false;
        used |= 1ull << hv;
    }
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (pattern.adjacent(i, j) !=
                host.adjacent(e.map[static_cast<std::size_t>(i)], e.map[static_cast<std::size_t>(j)]))
                return false;
    return true;
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
    std::uint64_t seen = 0;
    for (int v : s) {
        if (v < 0 || v >= g.order()) throw std::invalid_argument("induced_subgraph: vertex out of range");
        if ((seen >> v) & 1u) throw std::invalid_argument("induced_subgraph: repeated vertex");
        seen |= 1ull << v;
    }
    Graph h(static_cast<int>(s.size()));
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (g.adjacent(s[i], s[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
    return h;
}

std::optional<int> distance(const Graph& g, int x, int y) {
    if (x < 0 || x >= g.order() || y < 0 || y >= g.order())
        throw std::invalid_argument("distance: vertex out of range");
    if (x == y) return 0;
    std::uint64_t reached = 1ull << x;
    std::uint64_t frontier = reached;
    int d = 0;
    while (frontier) {
        ++d;
        std::uint64_t next = 0;
        for (std::uint64_t m = frontier; m; m &= m - 1) next |= g.neighbors(std::countr_zero(m));
        next &= ~reached;
        if ((next >> y) & 1u) return d;
        reached |= next;
        frontier = next;
    }
    return std::nullopt;
}

bool mask_connected(const Graph& g, std::uint64_t mask) {
    if (mask == 0) return true;
    std::uint64_t reached = mask & (~mask + 1);  // lowest set bit
    std::uint64_t frontier = reached;
    while (frontier) {
        std::uint64_t next = 0;
        for (std::uint64_t m = frontier; m; m &= m - 1) next |= g.neighbors(std::countr_zero(m));
        next &= mask & ~reached;
        reached |= next;
        frontier = next;
    }
    return reached == mask;
}

bool is_connected(const Graph& g) {
    if (g.order() <= 1) return true;
    return mask_connected(g, all_vertices_mask(g.order()));
}

bool is_two_connected(const Graph& g) {
    const int n = g.order();
    if (n < 3) return false;
    if (g.min_degree() < 2) return false;
    const std::uint64_t all = all_vertices_mask(n);
    if (!mask_connected(g, all)) return false;
    for (int v = 0; v < n; ++v)
        if (!mask_connected(g, all & ~(1ull << v))) return false;
    return true;
}

namespace {

// Sorted multiset of (degree, sorted neighbor degrees) used as a cheap
// isomorphism invariant and per-vertex compatibility test.
std::vector<std::vector<int>> degree_profiles(const Graph& g) {
    std::vector<std::vector<int>> prof(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) {
        auto& p = prof[static_cast<std::size_t>(v)];
        p.push_back(g.degree(v));
        for (int u : g.neighbor_list(v)) p.push_back(g.degree(u));
        std::sort(p.begin() + 1, p.end());
    }
    return prof;
}

bool extend_isomorphism(const Graph& g, const Graph& h, const std::vector<int>& order,
                        const std::vector<std::vector<int>>& pg,
                        const std::vector<std::vector<int>>& ph, std::vector<int>& map,
                        std::uint64_t& used, std::size_t depth) {
    if (depth == order.size()) return true;
    const int v = order[depth];
    for (int w = 0; w < h.order(); ++w) {
        if ((used >> w) & 1u) continue;
        if (pg[static_cast<std::size_t>(v)] != ph[static_cast<std::size_t>(w)]) continue;
        bool ok = true;
        for (std::size_t i = 0; i < depth && ok; ++i) {
            int u = order[i];
            if (g.adjacent(v, u) != h.adjacent(w, map[static_cast<std::size_t>(u)])) ok = false;
        }
        if (!ok) continue;
        map[static_cast<std::size_t>(v)] = w;
        used |= 1ull << w;
        if (extend_isomorphism(g, h, order, pg, ph, map, used, depth + 1)) return true;
        used &= ~(1ull << w);
    }
    return false;
}

}  // namespace

bool are_isomorphic(const Graph& g, const Graph& h) {
    if (g.order() > 16 || h.order() > 16)
        throw SizeError("are_isomorphic supports orders up to 16");
    if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
    auto pg = degree_profiles(g);
    auto ph = degree_profiles(h);
    {
        auto sg = pg;
        auto sh = ph;
        std::sort(sg.begin(), sg.end());
        std::sort(sh.begin(), sh.end());
        if (sg != sh) return false;
    }
    // Map high-degree vertices first: their images are the most constrained.
    std::vector<int> order(static_cast<std::size_t>(g.order()));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return g.degree(a) > g.degree(b) || (g.degree(a) == g.degree(b) && a < b); });
    std::vector<int> map(static_cast<std::size_t>(g.order()), -1);
    std::uint64_t used = 0;
    return extend_isomorphism(g, h, order, pg, ph, map, used, 0);
}

std::optional<std::array<int, 4>> find_claw(const Graph& g) {
    const int n = g.order();
    for (int v = 0; v < n; ++v) {
        const std::uint64_t nb = g.neighbors(v);
        if (std::popcount(nb) < 3) continue;
        // Three pairwise nonadjacent neighbors of v form a claw.
        for (std::uint64_t mu = nb; mu; mu &= mu - 1) {
            const int u = std::countr_zero(mu);
            std::uint64_t rest = nb & ~g.neighbors(u);
            rest &= ~((1ull << (u + 1)) - 1);  // w > u avoids re-testing pairs
            for (std::uint64_t mw = rest; mw; mw &= mw - 1) {
                const int w = std::countr_zero(mw);
                const std::uint64_t third = nb & ~g.neighbors(u) & ~g.neighbors(w) &
                                            ~(1ull << u) & ~(1ull << w);
                if (third) return std::array<int, 4>{v, u, w, std::countr_zero(third)};
            }
        }
    }
    return std::nullopt;
}

bool is_claw_free(const Graph& g) { return !find_claw(g).has_value(); }

void require_claw_free(const Graph& g) {
    if (auto claw = find_claw(g)) throw ClawError(*claw);
}

bool passes_filter(const Graph& g, GraphFilter f) {
    switch (f) {
        case GraphFilter::Connected: return is_connected(g);
        case GraphFilter::TwoConnected: return is_two_connected(g);
        case GraphFilter::ClawFree: return is_claw_free(g);
    }
    return false;
}

bool passes_filters(const Graph& g, const std::vector<GraphFilter>& filters) {
    for (GraphFilter f : filters)
        if (!passes_filter(g, f)) return false;
    return true;
}

int edge_bits(int n) {
    if (n < 0) throw std::invalid_argument("edge_bits: negative order");
    return n * (n - 1) / 2;
}

namespace {

// Pair order shared with graph6: bit k <-> k-th pair (i, j), i < j, listed
// column by column.
void fill_pair_table(int n, std::vector<std::pair<int, int>>& pairs) {
    pairs.clear();
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
}

void build_from_mask(int n, std::uint64_t mask, const std::vector<std::pair<int, int>>& pairs,
                     Graph& out) {
    out.reset(n);
    while (mask) {
        const int k = std::countr_zero(mask);
        mask &= mask - 1;
        out.add_edge(pairs[static_cast<std::size_t>(k)].first,
                     pairs[static_cast<std::size_t>(k)].second);
    }
}

}  // namespace

Graph graph_from_edge_mask(int n, std::uint64_t mask) {
    const int bits = edge_bits(n);
    if (bits > 62) throw SizeError("graph_from_edge_mask supports at most 62 vertex pairs");
    if (bits < 64 && (mask >> bits) != 0)
        throw std::invalid_argument("graph_from_edge_mask: mask has bits beyond the pair count");
    std::vector<std::pair<int, int>> pairs;
    fill_pair_table(n, pairs);
    Graph g;
    build_from_mask(n, mask, pairs, g);
    return g;
}

void enumerate_mask_range(int n, std::uint64_t begin, std::uint64_t end,
                          const std::vector<GraphFilter>& filters,
                          const std::function<void(const Graph&)>& fn) {
    const int bits = edge_bits(n);
    if (bits > 62) throw SizeError("enumerate_mask_range supports at most 62 vertex pairs");
    const std::uint64_t total = 1ull << bits;
    if (begin > end || end > total)
        throw std::invalid_argument("enumerate_mask_range: bad mask range");
    std::vector<std::pair<int, int>> pairs;
    fill_pair_table(n, pairs);
    Graph g;
    for (std::uint64_t mask = begin; mask < end; ++mask) {
        build_from_mask(n, mask, pairs, g);
        if (!passes_filters(g, filters)) continue;
        fn(g);
    }
}

void enumerate_labeled(int n, const std::vector<GraphFilter>& filters,
                       const std::function<void(const Graph&)>& fn) {
    if (n < 0) throw std::invalid_argument("enumerate_labeled: negative order");
    if (n > 8)
        throw SizeError(
            "enumerate_labeled is capped at n <= 8; stream larger corpora as graph6 instead");
    enumerate_mask_range(n, 0, 1ull << edge_bits(n), filters, fn);
}

}  // namespace clawham
