#include "clawham/patterns.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <set>

namespace clawham {

Pattern make_pattern(PatternKind kind, int param) {
    Pattern p;
    p.kind = kind;
    p.param = param;
    switch (kind) {
        case PatternKind::Path: {
            if (param < 2) throw std::invalid_argument("Path pattern needs at least 2 vertices");
            p.graph.reset(param);
            for (int i = 0; i + 1 < param; ++i) p.graph.add_edge(i, i + 1);
            p.name = "P" + std::to_string(param);
            break;
        }
        case PatternKind::Cycle3:
            p.graph = Graph(3, {{0, 1}, {0, 2}, {1, 2}});
            p.name = "C3";
            break;
        case PatternKind::Z: {
            // Triangle 0,1,2 with the tail 2-3-...-(2+param) hanging off 2.
            if (param < 1) throw std::invalid_argument("Z pattern needs a tail of length >= 1");
            p.graph.reset(3 + param);
            p.graph.add_edge(0, 1);
            p.graph.add_edge(0, 2);
            p.graph.add_edge(1, 2);
            for (int i = 2; i < 2 + param; ++i) p.graph.add_edge(i, i + 1);
            p.name = "Z" + std::to_string(param);
            break;
        }
        case PatternKind::Bull:
            // Triangle 0,1,2; pendants 3 at 0 and 4 at 1.
            p.graph = Graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}});
            p.name = "B";
            break;
        case PatternKind::Net:
            // Triangle 0,1,2; pendants 3,4,5 at 0,1,2 respectively.
            p.graph = Graph(6, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}, {2, 5}});
            p.name = "N";
            break;
        case PatternKind::Wounded:
            // Triangle 0,1,2; pendant 3 at 0; two-edge tail 1-4-5.
            p.graph = Graph(6, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}, {4, 5}});
            p.name = "W";
            break;
        case PatternKind::Claw:
            p.graph = Graph(4, {{0, 1}, {0, 2}, {0, 3}});
            p.name = "claw";
            break;
    }
    p.end_vertices = end_vertices(p.graph);
    return p;
}

Pattern pattern_from_name(std::string_view name) {
    std::string up;
    for (char c : name) up.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    if (up == "CLAW") return make_pattern(PatternKind::Claw);
    if (up == "C3") return make_pattern(PatternKind::Cycle3);
    if (up == "B") return make_pattern(PatternKind::Bull);
    if (up == "N") return make_pattern(PatternKind::Net);
    if (up == "W") return make_pattern(PatternKind::Wounded);
    if (up.size() == 2 && (up[0] == 'P' || up[0] == 'Z') && std::isdigit(static_cast<unsigned char>(up[1]))) {
        const int i = up[1] - '0';
        if (up[0] == 'P' && i >= 3 && i <= 9) return make_pattern(PatternKind::Path, i);
        if (up[0] == 'Z' && i >= 1 && i <= 6) return make_pattern(PatternKind::Z, i);
    }
    throw std::invalid_argument("unknown pattern name: " + std::string(name) +
                                " (expected P3..P9, C3, Z1..Z6, B, N, W, claw)");
}

VertexSet end_vertices(const Graph& g) {
    VertexSet out;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 1) out.push_back(v);
    return out;
}

namespace {

// Pattern vertices are assigned in BFS order from a root, so every vertex
// after the first is adjacent to an already-placed one and the candidate
// images shrink fast.
std::vector<int> bfs_order(const Graph& g, int root) {
    std::vector<int> order;
    std::uint64_t seen = 1ull << root;
    order.push_back(root);
    for (std::size_t head = 0; head < order.size(); ++head) {
        for (int u : g.neighbor_list(order[head])) {
            if ((seen >> u) & 1u) continue;
            seen |= 1ull << u;
            order.push_back(u);
        }
    }
    if (order.size() != static_cast<std::size_t>(g.order()))
        throw std::logic_error("pattern graph is not connected");
    return order;
}

struct InducedSearch {
    const Graph& host;
    const Pattern& p;
    std::vector<int> order;       // pattern vertices in assignment order
    std::vector<int> image;       // pattern vertex -> host vertex (-1 unset)
    std::uint64_t used = 0;
    std::uint64_t end_mask = 0;   // pattern end vertices as a bitmask

    SearchMode mode;
    std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
    std::vector<Embedding> results;
    bool done = false;

    InducedSearch(const Graph& host_, const Pattern& p_, SearchMode mode_, int root)
        : host(host_), p(p_), order(bfs_order(p_.graph, root)),
          image(static_cast<std::size_t>(p_.graph.order()), -1), mode(mode_) {
        for (int e : p.end_vertices) end_mask |= 1ull << e;
    }

    bool consistent(int pv, int hv, std::size_t depth) const {
        for (std::size_t i = 0; i < depth; ++i) {
            const int pu = order[i];
            if (p.graph.adjacent(pv, pu) != host.adjacent(hv, image[static_cast<std::size_t>(pu)]))
                return false;
        }
        return true;
    }

    void record() {
        std::uint64_t img = 0, end_img = 0;
        for (int pv = 0; pv < p.graph.order(); ++pv) {
            const std::uint64_t bit = 1ull << image[static_cast<std::size_t>(pv)];
            img |= bit;
            if ((end_mask >> pv) & 1u) end_img |= bit;
        }
        if (!seen.emplace(img, end_img).second) return;
        results.push_back(Embedding{image});
        if (mode == SearchMode::First) done = true;
    }

    void run(std::size_t depth) {
        if (done) return;
        if (depth == order.size()) {
            record();
            return;
        }
        const int pv = order[depth];
        if (image[static_cast<std::size_t>(pv)] >= 0) {  // pre-anchored vertex
            run(depth + 1);
            return;
        }
        for (int hv = 0; hv < host.order() && !done; ++hv) {
            if ((used >> hv) & 1u) continue;
            if (!consistent(pv, hv, depth)) continue;
            image[static_cast<std::size_t>(pv)] = hv;
            used |= 1ull << hv;
            run(depth + 1);
            used &= ~(1ull << hv);
            image[static_cast<std::size_t>(pv)] = -1;
        }
    }
};

}  // namespace

std::vector<Embedding> find_induced(const Graph& host, const Pattern& p, SearchMode mode) {
    if (p.graph.order() > host.order()) return {};
    InducedSearch search(host, p, mode, 0);
    search.run(0);
    return std::move(search.results);
}

bool is_free(const Graph& host, const Pattern& p) {
    return find_induced(host, p, SearchMode::First).empty();
}

bool is_phi_end_vertex(const Graph& host, const Pattern& p, int v) {
    if (v < 0 || v >= host.order()) throw std::invalid_argument("is_phi_end_vertex: vertex out of range");
    if (p.graph.order() > host.order()) return false;
    for (int e : p.end_vertices) {
        // Rooting the search at e pins its image to v up front.
        InducedSearch search(host, p, SearchMode::First, e);
        search.image[static_cast<std::size_t>(e)] = v;
        search.used = 1ull << v;
        search.run(0);
        if (!search.results.empty()) return true;
    }
    return false;
}

VertexSet phi_end_vertex_set(const Graph& host, const Pattern& p) {
    VertexSet out;
    for (int v = 0; v < host.order(); ++v)
        if (is_phi_end_vertex(host, p, v)) out.push_back(v);
    return out;
}

PhiResult phi_holds(const Graph& host, const Pattern& p, int k) {
    const int n = host.order();
    for (int v = 0; v < n; ++v) {
        if (3 * host.degree(v) >= n + k) continue;
        if (is_phi_end_vertex(host, p, v))
            return PhiResult{false, v, host.degree(v)};
    }
    return PhiResult{};
}

}  // namespace clawham
