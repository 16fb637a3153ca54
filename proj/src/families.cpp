#include "clawham/families.hpp"

#include <cctype>
#include <sstream>

namespace clawham {

int LabeledGraph::label(const std::string& name) const {
    auto it = labels.find(name);
    if (it == labels.end()) throw std::invalid_argument("unknown label: " + name);
    return it->second;
}

BrousekSpec BrousekSpec::paths(int k1, int k2, int k3) {
    return BrousekSpec{{k1, k2, k3}};
}

BrousekSpec BrousekSpec::parse(std::string_view text) {
    BrousekSpec spec;
    std::size_t slot = 0;
    std::string field;
    std::istringstream in{std::string(text)};
    while (std::getline(in, field, ',')) {
        if (slot >= 3) throw std::invalid_argument("brousek spec: expected exactly three slots");
        std::string trimmed;
        for (char c : field)
            if (!std::isspace(static_cast<unsigned char>(c))) trimmed.push_back(c);
        if (trimmed == "T" || trimmed == "t") {
            spec.x[slot] = std::nullopt;
        } else {
            std::size_t used = 0;
            int k;
            try {
                k = std::stoi(trimmed, &used);
            } catch (const std::exception&) {
                throw std::invalid_argument("brousek spec: bad slot \"" + trimmed + "\"");
            }
            if (used != trimmed.size())
                throw std::invalid_argument("brousek spec: bad slot \"" + trimmed + "\"");
            if (k < 3)
                throw std::invalid_argument("brousek spec: path slots need k >= 3");
            spec.x[slot] = k;
        }
        ++slot;
    }
    if (slot != 3) throw std::invalid_argument("brousek spec: expected exactly three slots");
    return spec;
}

std::string BrousekSpec::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < 3; ++i) {
        if (i) out.push_back(',');
        out += x[i] ? std::to_string(*x[i]) : "T";
    }
    return out;
}

int BrousekSpec::total_order() const {
    int n = 6;
    for (const auto& slot : x) n += slot ? *slot - 2 : 1;
    return n;
}

LabeledGraph brousek(const BrousekSpec& spec) {
    for (const auto& slot : spec.x)
        if (slot && *slot < 3)
            throw std::invalid_argument("brousek: path slots need k >= 3");
    LabeledGraph out;
    out.graph.reset(spec.total_order());
    for (int i = 0; i < 3; ++i) {
        out.labels["a" + std::to_string(i + 1)] = i;
        out.labels["b" + std::to_string(i + 1)] = 3 + i;
    }
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            out.graph.add_edge(i, j);
            out.graph.add_edge(3 + i, 3 + j);
        }
    int next = 6;
    for (int i = 0; i < 3; ++i) {
        const int a = i;
        const int b = 3 + i;
        if (!spec.x[static_cast<std::size_t>(i)]) {
            out.labels["c" + std::to_string(i + 1)] = next;
            out.graph.add_edge(a, b);
            out.graph.add_edge(a, next);
            out.graph.add_edge(b, next);
            ++next;
            continue;
        }
        const int k = *spec.x[static_cast<std::size_t>(i)];
        int prev = a;
        for (int j = 1; j <= k - 2; ++j) {
            out.labels["c" + std::to_string(i + 1) + "_" + std::to_string(j)] = next;
            out.graph.add_edge(prev, next);
            prev = next++;
        }
        out.graph.add_edge(prev, b);
    }
    return out;
}

LabeledGraph fig2(int k) {
    if (k < 3) throw std::invalid_argument("fig2: k must be at least 3");
    if (2 * k + 3 > Graph::max_order) throw SizeError("fig2: order exceeds the 64-vertex cap");
    LabeledGraph out;
    out.graph.reset(2 * k + 3);
    for (int i = 0; i < k; ++i) {
        out.labels["a" + std::to_string(i + 1)] = i;
        out.labels["b" + std::to_string(i + 1)] = k + i;
        for (int j = i + 1; j < k; ++j) {
            out.graph.add_edge(i, j);
            out.graph.add_edge(k + i, k + j);
        }
    }
    for (int i = 0; i < 3; ++i) {
        const int m = 2 * k + i;
        out.labels["m" + std::to_string(i + 1)] = m;
        out.graph.add_edge(i, m);
        out.graph.add_edge(m, k + i);
    }
    return out;
}

LabeledGraph line_graph(const Graph& h) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < h.order(); ++u)
        for (int v = u + 1; v < h.order(); ++v)
            if (h.adjacent(u, v)) edges.emplace_back(u, v);
    if (edges.empty()) throw std::invalid_argument("line_graph: input has no edges");
    if (edges.size() > Graph::max_order)
        throw SizeError("line_graph: result exceeds the 64-vertex cap");
    LabeledGraph out;
    out.graph.reset(static_cast<int>(edges.size()));
    for (std::size_t i = 0; i < edges.size(); ++i) {
        out.labels["e(" + std::to_string(edges[i].first) + "," +
                   std::to_string(edges[i].second) + ")"] = static_cast<int>(i);
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            const bool share = edges[i].first == edges[j].first ||
                               edges[i].first == edges[j].second ||
                               edges[i].second == edges[j].first ||
                               edges[i].second == edges[j].second;
            if (share) out.graph.add_edge(static_cast<int>(i), static_cast<int>(j));
        }
    }
    return out;
}

}  // namespace clawham
