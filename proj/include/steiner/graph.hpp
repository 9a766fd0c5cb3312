#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace steiner {

// Vertices are dense integers 0..n-1 and vertex subsets are bit masks in a
// 64-bit word, which caps the supported order at 64. Exact index
// computations are further capped (see steiner_distance.hpp).
inline constexpr int kMaxOrder = 64;

using VertexMask = std::uint64_t;

inline VertexMask vertex_bit(int v) { return VertexMask{1} << v; }

/// Undirected edge in canonical orientation (u < v).
struct Edge {
    int u = 0;
    int v = 0;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

Edge make_edge(int a, int b);

std::string edge_str(Edge e);  // "(u,v)"

/// Input-format violation; carries the 1-based line number when known.
class parse_error : public std::runtime_error {
public:
    parse_error(int line, const std::string& what);
    int line() const { return line_; }

private:
    int line_;
};

/// Resource-cap violation (order, subset size, group size), as opposed to
/// malformed input or an out-of-range argument.
class cap_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Simple undirected graph, immutable after construction. Edges are stored
/// sorted in canonical orientation; adjacency rows are bit masks.
class Graph {
public:
    Graph(int n, std::vector<Edge> edges);

    int order() const { return n_; }
    int size() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    VertexMask adjacency(int v) const { return adj_[v]; }
    bool has_edge(int u, int v) const;
    int degree(int v) const;
    VertexMask full_mask() const;

private:
    int n_;
    std::vector<Edge> edges_;
    std::vector<VertexMask> adj_;
};

bool is_connected(const Graph& g);

/// True when the subgraph induced by `mask` is connected (a single vertex
/// counts as connected; the empty mask does not).
bool connected_induced(const Graph& g, VertexMask mask);

/// Number of edges incident to a vertex of degree 1.
int pendant_edge_count(const Graph& g);

bool is_tree(const Graph& g);

/// Minimum number of vertices whose deletion disconnects g, with
/// kappa(K_n) = n-1 by convention. Brute-force separator search, n <= 16.
int vertex_connectivity(const Graph& g);

enum class Family { path, cycle, star, complete, complete_multipartite, paw };

/// Named-family request. params holds the order (path, cycle, complete),
/// the leaf count (star, so star(n) is the star on n+1 vertices), or the
/// part sizes (complete_multipartite). paw takes no params.
struct FamilySpec {
    Family kind = Family::path;
    std::vector<int> params;
};

Graph generate(const FamilySpec& spec);

/// Edge-list text: first non-comment line is the vertex count, then one
/// "u v" pair per line; '#' starts a comment; blank lines are skipped.
Graph parse_edgelist(std::istream& in);
Graph parse_edgelist(std::string_view text);

/// graph6 short form (n <= 62), one graph per string. A single trailing
/// newline is tolerated.
Graph parse_graph6(std::string_view bytes);
std::string emit_graph6(const Graph& g);

/// One representative per isomorphism class of trees on n vertices,
/// 2 <= n <= 10, in a fixed deterministic order.
std::vector<Graph> enumerate_trees(int n);

/// One canonically labeled representative per isomorphism class of
/// connected graphs on n vertices, 1 <= n <= 7. Cached after first build.
const std::vector<Graph>& connected_graph_corpus(int n);

/// Deterministic 64-bit generator (splitmix64). Independent of the
/// standard library distributions so seeded corpora are reproducible
/// across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    int below(int bound);

private:
    std::uint64_t state_;
};

/// Random connected graph: a uniform random labeled tree plus each
/// remaining pair independently with probability 1/2.
Graph random_connected_graph(int n, Rng& rng);

}  // namespace steiner
