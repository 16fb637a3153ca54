#ifndef CLAWHAM_GRAPH_HPP
#define CLAWHAM_GRAPH_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace clawham {

// An ordered set of vertex indices (strictly increasing unless an operation
// documents otherwise, e.g. induced_subgraph relabels in the given order).
using VertexSet = std::vector<int>;

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

// Malformed serialized input; byte_offset (or line for edge lists) points at
// the first offending position.
struct FormatError : std::runtime_error {
    FormatError(const std::string& what, std::size_t byte_offset_);
    std::size_t byte_offset;
};

// A size cap was exceeded (graph order, encodable order, enumeration order...).
struct SizeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An operation that requires a claw-free graph was handed a graph with an
// induced K_{1,3}; witness[0] is the center, witness[1..3] the leaves.
struct ClawError : std::domain_error {
    explicit ClawError(const std::array<int, 4>& witness_);
    std::array<int, 4> witness;
};

// ---------------------------------------------------------------------------
// Graph
// ---------------------------------------------------------------------------

// Simple undirected graph on vertices 0..n-1.  The adjacency matrix is kept
// as one 64-bit row per vertex, so neighborhood intersection, degree, and
// connectivity checks are single-word operations.  Orders above 64 are
// rejected at construction.
class Graph {
public:
    static constexpr int max_order = 64;

    Graph() = default;
    explicit Graph(int n);
    Graph(int n, std::initializer_list<std::pair<int, int>> edges);

    int order() const { return n_; }
    int edge_count() const;

    bool adjacent(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return (rows_[static_cast<std::size_t>(u)] >> v) & 1u;
    }
    void add_edge(int u, int v);

    // Bitmask of neighbors of v (bit i set iff i ~ v).
    std::uint64_t neighbors(int v) const {
        check_vertex(v);
        return rows_[static_cast<std::size_t>(v)];
    }
    VertexSet neighbor_list(int v) const;
    int degree(int v) const;
    int min_degree() const;  // 0 for the empty graph
    int max_degree() const;

    // Reinitialize to an edgeless graph on n vertices, reusing storage.
    void reset(int n);

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    std::vector<std::uint64_t> rows_;

    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::invalid_argument("vertex index out of range");
    }
};

// Bitmask with bits 0..n-1 set.
inline std::uint64_t all_vertices_mask(int n) {
    return n >= 64 ? ~0ull : (1ull << n) - 1;
}

// ---------------------------------------------------------------------------
// Embeddings
// ---------------------------------------------------------------------------

// An injective map from the vertices of a (pattern) graph into a host graph;
// map[i] is the host image of pattern vertex i.
struct Embedding {
    std::vector<int> map;
};

// True iff e maps pattern injectively onto an *induced* copy in host:
// pattern adjacency and host adjacency agree on every image pair.
bool is_induced_embedding(const Graph& pattern, const Graph& host, const Embedding& e);

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

// graph6: single-byte order form only (n <= 62).  Leading/trailing
// whitespace is ignored; anything else malformed raises FormatError with the
// byte offset of the offending position.
Graph parse_graph6(std::string_view token);
std::string encode_graph6(const Graph& g);

// Edge-list text: first non-comment line "n m", then m lines "u v" with
// 0-based endpoints.  Blank lines and lines starting with '#' are ignored.
// FormatError::byte_offset carries the 1-based line number.
Graph parse_edge_list(std::string_view text);
std::string encode_edge_list(const Graph& g);

// Graphviz export (undirected).  vertex_attr, when set, returns a raw
// attribute list (e.g. "color=red") appended to the vertex statement.
std::string to_dot(const Graph& g, const std::function<std::string(int)>& vertex_attr = {});

// ---------------------------------------------------------------------------
// Basic operations
// ---------------------------------------------------------------------------

// Subgraph induced on s, relabeled 0..|s|-1 in the order given by s.
// s must contain valid vertices without repetition.
Graph induced_subgraph(const Graph& g, const VertexSet& s);

// Shortest-path distance; nullopt when y is unreachable from x.
std::optional<int> distance(const Graph& g, int x, int y);

bool is_connected(const Graph& g);  // true for n <= 1

// True iff the subgraph induced on `mask` is connected (true for empty mask).
bool mask_connected(const Graph& g, std::uint64_t mask);

// n >= 3, connected, and no cut vertex.
bool is_two_connected(const Graph& g);

// Exact isomorphism test, both orders <= 16 (SizeError beyond).
bool are_isomorphic(const Graph& g, const Graph& h);

// First induced K_{1,3} in scan order, as {center, leaf, leaf, leaf}.
std::optional<std::array<int, 4>> find_claw(const Graph& g);
bool is_claw_free(const Graph& g);
// Throws ClawError when g has an induced claw.
void require_claw_free(const Graph& g);

// ---------------------------------------------------------------------------
// Exhaustive labeled enumeration
// ---------------------------------------------------------------------------

enum class GraphFilter { Connected, TwoConnected, ClawFree };

bool passes_filter(const Graph& g, GraphFilter f);
bool passes_filters(const Graph& g, const std::vector<GraphFilter>& filters);

// Number of vertex pairs = bits in the edge-set counter for order n.
int edge_bits(int n);

// Labeled graph whose edge set is given by `mask`: bit k of mask is the k-th
// pair in column order (0,1), (0,2), (1,2), (0,3), ... — the same order
// graph6 serializes.
Graph graph_from_edge_mask(int n, std::uint64_t mask);

// Visit every labeled graph of order n whose edge mask lies in [begin, end),
// in increasing mask order, skipping graphs that fail the filter chain.
// The Graph reference passed to fn points at reused storage.
void enumerate_mask_range(int n, std::uint64_t begin, std::uint64_t end,
                          const std::vector<GraphFilter>& filters,
                          const std::function<void(const Graph&)>& fn);

// All 2^(n(n-1)/2) labeled graphs of order n in counter order.  Capped at
// n <= 8; larger corpora should be streamed as graph6 instead (SizeError).
void enumerate_labeled(int n, const std::vector<GraphFilter>& filters,
                       const std::function<void(const Graph&)>& fn);

}  // namespace clawham

#endif  // CLAWHAM_GRAPH_HPP
