#include <cctype>
#include <sstream>

#include "clawham/graph.hpp"

namespace clawham {

namespace {

// graph6 payload bytes carry 6 bits each, offset by 63 into printable ASCII.
constexpr int g6_bias = 63;
constexpr int g6_max_byte = 126;

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Graph parse_graph6(std::string_view token) {
    const std::string_view t = trim(token);
    if (t.empty()) throw FormatError("graph6: empty token", 0);
    for (std::size_t i = 0; i < t.size(); ++i) {
        const unsigned char b = static_cast<unsigned char>(t[i]);
        if (b < g6_bias || b > g6_max_byte)
            throw FormatError("graph6: byte value outside 63..126", i);
    }
    if (t[0] == '~')
        throw FormatError("graph6: multi-byte order form (n > 62) is not supported", 0);
    const int n = t[0] - g6_bias;
    const int bits = n * (n - 1) / 2;
    const std::size_t payload = (static_cast<std::size_t>(bits) + 5) / 6;
    if (t.size() < 1 + payload)
        throw FormatError("graph6: truncated bit field", t.size());
    if (t.size() > 1 + payload)
        throw FormatError("graph6: trailing data after bit field", 1 + payload);

    Graph g(n);
    int bit = 0;
    for (std::size_t byte = 0; byte < payload; ++byte) {
        const int value = t[1 + byte] - g6_bias;
        for (int k = 5; k >= 0; --k, ++bit) {
            const bool set = (value >> k) & 1;
            if (bit >= bits) {
                if (set) throw FormatError("graph6: nonzero padding bits", 1 + byte);
                continue;
            }
            if (set) {
                // Upper triangle in column order: recover (i, j) from the
                // running bit index.
                int j = 1;
                int b = bit;
                while (b >= j) b -= j, ++j;
                g.add_edge(b, j);
            }
        }
    }
    return g;
}

std::string encode_graph6(const Graph& g) {
    const int n = g.order();
    if (n > 62) throw SizeError("encode_graph6 supports orders up to 62");
    std::string out;
    out.push_back(static_cast<char>(n + g6_bias));
    int acc = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + g6_bias));
                acc = 0;
                filled = 0;
            }
        }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + g6_bias));
    return out;
}

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    long n = -1, m = -1;
    long seen = 0;
    Graph g;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string_view body = trim(line);
        if (body.empty() || body.front() == '#') continue;
        std::istringstream fields{std::string(body)};
        if (n < 0) {
            if (!(fields >> n >> m) || n < 0 || m < 0 || !(fields >> std::ws).eof())
                throw FormatError("edge list: header must be \"n m\"", lineno);
            if (n > Graph::max_order) throw FormatError("edge list: order exceeds 64", lineno);
            g.reset(static_cast<int>(n));
            continue;
        }
        long u, v;
        if (!(fields >> u >> v) || !(fields >> std::ws).eof())
            throw FormatError("edge list: expected \"u v\"", lineno);
        if (seen == m) throw FormatError("edge list: more edges than declared", lineno);
        if (u < 0 || u >= n || v < 0 || v >= n || u == v)
            throw FormatError("edge list: invalid endpoint", lineno);
        if (g.adjacent(static_cast<int>(u), static_cast<int>(v)))
            throw FormatError("edge list: duplicate edge", lineno);
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
        ++seen;
    }
    if (n < 0) throw FormatError("edge list: missing header", lineno);
    if (seen != m) throw FormatError("edge list: fewer edges than declared", lineno);
    return g;
}

std::string encode_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.order() << ' ' << g.edge_count() << '\n';
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (g.adjacent(u, v)) out << u << ' ' << v << '\n';
    return out.str();
}

std::string to_dot(const Graph& g, const std::function<std::string(int)>& vertex_attr) {
    std::ostringstream out;
    out << "graph g {\n";
    for (int v = 0; v < g.order(); ++v) {
        out << "  " << v;
        if (vertex_attr) {
            const std::string attr = vertex_attr(v);
            if (!attr.empty()) out << " [" << attr << "]";
        }
        out << ";\n";
    }
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (g.adjacent(u, v)) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace clawham
