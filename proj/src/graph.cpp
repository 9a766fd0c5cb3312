#include "steiner/graph.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

namespace steiner {

Edge make_edge(int a, int b) {
    if (a == b) throw std::invalid_argument("self-loop at vertex " + std::to_string(a));
    return a < b ? Edge{a, b} : Edge{b, a};
}

std::string edge_str(Edge e) {
    return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

parse_error::parse_error(int line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 1 || n > kMaxOrder)
        throw std::invalid_argument("order must be in 1.." + std::to_string(kMaxOrder));
    for (const Edge& e : edges_) {
        if (e.u < 0 || e.v >= n) throw std::invalid_argument("vertex out of range: " + edge_str(e));
        if (e.u >= e.v) throw std::invalid_argument("edge not in canonical orientation");
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw std::invalid_argument("duplicate edge");
    adj_.assign(n_, 0);
    for (const Edge& e : edges_) {
        adj_[e.u] |= vertex_bit(e.v);
        adj_[e.v] |= vertex_bit(e.u);
    }
}

bool Graph::has_edge(int u, int v) const {
    return u != v && (adj_[u] >> v) & 1;
}

int Graph::degree(int v) const {
    return std::popcount(adj_[v]);
}

VertexMask Graph::full_mask() const {
    return n_ == 64 ? ~VertexMask{0} : (vertex_bit(n_) - 1);
}

bool connected_induced(const Graph& g, VertexMask mask) {
    if (mask == 0) return false;
    VertexMask reached = mask & -mask;
    for (;;) {
        VertexMask frontier = reached;
        VertexMask next = reached;
        while (frontier) {
            int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            next |= g.adjacency(v) & mask;
        }
        if (next == reached) break;
        reached = next;
    }
    return reached == mask;
}

bool is_connected(const Graph& g) {
    return connected_induced(g, g.full_mask());
}

int pendant_edge_count(const Graph& g) {
    int count = 0;
    for (const Edge& e : g.edges())
        if (g.degree(e.u) == 1 || g.degree(e.v) == 1) ++count;
    return count;
}

bool is_tree(const Graph& g) {
    return g.size() == g.order() - 1 && is_connected(g);
}

int vertex_connectivity(const Graph& g) {
    const int n = g.order();
    if (n > 16) throw cap_error("vertex_connectivity supports n <= 16");
    if (!is_connected(g)) throw std::invalid_argument("graph is disconnected");
    if (g.size() == static_cast<std::int64_t>(n) * (n - 1) / 2) return n - 1;
    const VertexMask full = g.full_mask();
    // Smallest s such that deleting some s vertices disconnects the rest.
    for (int s = 1; s <= n - 2; ++s) {
        for (VertexMask cut = (vertex_bit(s) - 1); cut < vertex_bit(n);) {
            if (!connected_induced(g, full & ~cut)) return s;
            // Gosper's hack: next mask with the same popcount.
            VertexMask c = cut & -cut, r = cut + c;
            cut = r | (((cut ^ r) >> 2) / c);
        }
    }
    return n - 1;  // unreachable for non-complete connected graphs
}

Graph generate(const FamilySpec& spec) {
    std::vector<Edge> edges;
    switch (spec.kind) {
        case Family::path: {
            if (spec.params.size() != 1 || spec.params[0] < 1)
                throw std::invalid_argument("path needs one order parameter >= 1");
            int n = spec.params[0];
            for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
            return Graph(n, std::move(edges));
        }
        case Family::cycle: {
            if (spec.params.size() != 1 || spec.params[0] < 3)
                throw std::invalid_argument("cycle needs one order parameter >= 3");
            int n = spec.params[0];
            for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
            edges.push_back({0, n - 1});
            return Graph(n, std::move(edges));
        }
        case Family::star: {
            if (spec.params.size() != 1 || spec.params[0] < 1)
                throw std::invalid_argument("star needs one leaf-count parameter >= 1");
            int leaves = spec.params[0];
            for (int i = 1; i <= leaves; ++i) edges.push_back({0, i});
            return Graph(leaves + 1, std::move(edges));
        }
        case Family::complete: {
            if (spec.params.size() != 1 || spec.params[0] < 1)
                throw std::invalid_argument("complete needs one order parameter >= 1");
            int n = spec.params[0];
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
            return Graph(n, std::move(edges));
        }
        case Family::complete_multipartite: {
            if (spec.params.size() < 2)
                throw std::invalid_argument("complete_multipartite needs at least two part sizes");
            for (int a : spec.params)
                if (a < 1) throw std::invalid_argument("part sizes must be >= 1");
            int n = std::accumulate(spec.params.begin(), spec.params.end(), 0);
            std::vector<int> part_of;
            for (std::size_t p = 0; p < spec.params.size(); ++p)
                part_of.insert(part_of.end(), spec.params[p], static_cast<int>(p));
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (part_of[u] != part_of[v]) edges.push_back({u, v});
            return Graph(n, std::move(edges));
        }
        case Family::paw: {
            if (!spec.params.empty()) throw std::invalid_argument("paw takes no parameters");
            return Graph(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
        }
    }
    throw std::invalid_argument("unknown family");
}

// ---- edge-list format ------------------------------------------------------

namespace {

bool skippable(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Graph parse_edgelist(std::istream& in) {
    std::string line;
    int lineno = 0;
    int n = -1;
    std::vector<Edge> edges;
    std::unordered_set<std::uint64_t> seen;
    while (std::getline(in, line)) {
        ++lineno;
        if (skippable(line)) continue;
        std::istringstream fields(line);
        if (n < 0) {
            std::string extra;
            if (!(fields >> n) || fields >> extra)
                throw parse_error(lineno, "expected the vertex count");
            if (n < 1 || n > kMaxOrder)
                throw parse_error(lineno, "vertex count out of range 1..64");
            continue;
        }
        int u, v;
        std::string extra;
        if (!(fields >> u >> v) || fields >> extra)
            throw parse_error(lineno, "malformed line, expected \"u v\"");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw parse_error(lineno, "vertex out of range 0.." + std::to_string(n - 1));
        if (u == v) throw parse_error(lineno, "self-loop at vertex " + std::to_string(u));
        Edge e = make_edge(u, v);
        if (!seen.insert((static_cast<std::uint64_t>(e.u) << 32) | static_cast<std::uint32_t>(e.v))
                 .second)
            throw parse_error(lineno, "duplicate edge " + edge_str(e));
        edges.push_back(e);
    }
    if (n < 0) throw parse_error(lineno, "empty input, expected the vertex count");
    return Graph(n, std::move(edges));
}

Graph parse_edgelist(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_edgelist(in);
}

// ---- graph6 ----------------------------------------------------------------

Graph parse_graph6(std::string_view bytes) {
    while (!bytes.empty() && (bytes.back() == '\n' || bytes.back() == '\r'))
        bytes.remove_suffix(1);
    if (bytes.empty()) throw parse_error(1, "truncated graph6: empty input");
    const unsigned char first = static_cast<unsigned char>(bytes[0]);
    if (first == 126) throw parse_error(1, "graph6 long form (n > 62) unsupported");
    if (first < 63 || first > 125) throw parse_error(1, "graph6 byte out of range 63..126");
    const int n = first - 63;
    if (n < 1) throw parse_error(1, "graph6 graph of order 0 unsupported");
    const int nbits = n * (n - 1) / 2;
    const std::size_t nbytes = (nbits + 5) / 6;
    if (bytes.size() - 1 < nbytes) throw parse_error(1, "truncated graph6 bit stream");
    if (bytes.size() - 1 > nbytes) throw parse_error(1, "trailing data after graph6 bit stream");
    std::vector<Edge> edges;
    int bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            unsigned char c = static_cast<unsigned char>(bytes[1 + bit / 6]);
            if (c < 63 || c > 126) throw parse_error(1, "graph6 byte out of range 63..126");
            if ((c - 63) >> (5 - bit % 6) & 1) edges.push_back({i, j});
        }
    }
    for (std::size_t b = bit; b < nbytes * 6; ++b) {
        unsigned char c = static_cast<unsigned char>(bytes[1 + b / 6]);
        if (c < 63 || c > 126) throw parse_error(1, "graph6 byte out of range 63..126");
        if ((c - 63) >> (5 - b % 6) & 1) throw parse_error(1, "nonzero graph6 padding bits");
    }
    return Graph(n, std::move(edges));
}

std::string emit_graph6(const Graph& g) {
    const int n = g.order();
    if (n > 62) throw std::invalid_argument("graph6 short form supports n <= 62");
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    int acc = 0, filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

// ---- tree enumeration ------------------------------------------------------

namespace {

std::vector<Edge> decode_pruefer(const std::vector<int>& seq, int n) {
    std::vector<int> deg(n, 1);
    for (int s : seq) ++deg[s];
    std::vector<Edge> edges;
    edges.reserve(n - 1);
    int ptr = 0;
    while (deg[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int s : seq) {
        edges.push_back(make_edge(leaf, s));
        if (--deg[s] == 1 && s < ptr) {
            leaf = s;
        } else {
            ++ptr;
            while (deg[ptr] != 1) ++ptr;
            leaf = ptr;
        }
    }
    edges.push_back(make_edge(leaf, n - 1));
    return edges;
}

std::string rooted_code(int v, int parent, const std::vector<std::vector<int>>& adj) {
    std::vector<std::string> child_codes;
    for (int w : adj[v])
        if (w != parent) child_codes.push_back(rooted_code(w, v, adj));
    std::sort(child_codes.begin(), child_codes.end());
    std::string code = "(";
    for (const std::string& c : child_codes) code += c;
    code += ")";
    return code;
}

// Canonical code of a free tree: AHU encoding rooted at the center (for
// bicentral trees, the sorted pair of half-codes under a distinct bracket).
std::string tree_code(int n, const std::vector<Edge>& edges) {
    std::vector<std::vector<int>> adj(n);
    for (const Edge& e : edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = static_cast<int>(adj[v].size());
    std::vector<int> layer;
    std::vector<bool> removed(n, false);
    int remaining = n;
    for (int v = 0; v < n; ++v)
        if (deg[v] <= 1) layer.push_back(v);
    while (remaining > 2) {
        std::vector<int> next;
        for (int v : layer) {
            removed[v] = true;
            --remaining;
            for (int w : adj[v])
                if (!removed[w] && --deg[w] == 1) next.push_back(w);
        }
        layer = std::move(next);
    }
    std::vector<int> centers;
    for (int v = 0; v < n; ++v)
        if (!removed[v]) centers.push_back(v);
    if (centers.size() == 1) return rooted_code(centers[0], -1, adj);
    std::string a = rooted_code(centers[0], centers[1], adj);
    std::string b = rooted_code(centers[1], centers[0], adj);
    if (b < a) std::swap(a, b);
    return "[" + a + b + "]";
}

}  // namespace

std::vector<Graph> enumerate_trees(int n) {
    if (n < 2 || n > 10) throw std::invalid_argument("enumerate_trees supports 2 <= n <= 10");
    if (n == 2) return {Graph(2, {{0, 1}})};
    std::map<std::string, Graph> reps;
    std::vector<int> seq(n - 2, 0);
    for (;;) {
        std::vector<Edge> edges = decode_pruefer(seq, n);
        std::string code = tree_code(n, edges);
        if (!reps.contains(code)) reps.emplace(code, Graph(n, edges));
        int i = n - 3;
        while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
        if (i < 0) break;
        ++seq[i];
    }
    std::vector<Graph> out;
    out.reserve(reps.size());
    for (auto& [code, g] : reps) out.push_back(std::move(g));
    return out;
}

// ---- connected-graph corpus ------------------------------------------------

namespace {

// Lexicographically least upper-triangle adjacency bit string over all
// vertex relabelings. Fits in 64 bits for n <= 7 (21 edge slots).
std::uint64_t canonical_bits(const Graph& g) {
    const int n = g.order();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
        std::uint64_t code = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i) code = (code << 1) | (g.has_edge(perm[i], perm[j]) ? 1 : 0);
        best = std::min(best, code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

Graph graph_from_bits(int n, std::uint64_t code) {
    std::vector<Edge> edges;
    int nbits = n * (n - 1) / 2;
    int bit = nbits;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (code >> --bit & 1) edges.push_back({i, j});
    return Graph(n, std::move(edges));
}

// Every connected graph arises by attaching a new highest-numbered vertex
// to a nonempty neighbor set of a smaller connected graph, so augmenting
// the (n-1)-corpus and deduplicating by canonical form is exhaustive.
std::vector<Graph> augment_corpus(const std::vector<Graph>& parents, int n) {
    std::set<std::uint64_t> canon;
    for (const Graph& parent : parents) {
        const std::vector<Edge>& base = parent.edges();
        for (VertexMask nb = 1; nb < vertex_bit(n - 1); ++nb) {
            std::vector<Edge> edges = base;
            for (VertexMask rest = nb; rest;) {
                int v = std::countr_zero(rest);
                rest &= rest - 1;
                edges.push_back({v, n - 1});
            }
            canon.insert(canonical_bits(Graph(n, std::move(edges))));
        }
    }
    std::vector<Graph> out;
    out.reserve(canon.size());
    for (std::uint64_t code : canon) out.push_back(graph_from_bits(n, code));
    return out;
}

}  // namespace

const std::vector<Graph>& connected_graph_corpus(int n) {
    if (n < 1 || n > 7) throw cap_error("connected_graph_corpus supports 1 <= n <= 7");
    static std::array<std::vector<Graph>, 8> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    if (cache[1].empty()) cache[1] = {Graph(1, {})};
    for (int level = 2; level <= n; ++level)
        if (cache[level].empty()) cache[level] = augment_corpus(cache[level - 1], level);
    return cache[n];
}

// ---- random graphs ---------------------------------------------------------

std::uint64_t Rng::next() {
    state_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

int Rng::below(int bound) {
    return static_cast<int>(next() % static_cast<std::uint64_t>(bound));
}

Graph random_connected_graph(int n, Rng& rng) {
    if (n < 2 || n > kMaxOrder) throw std::invalid_argument("order must be in 2..64");
    std::vector<Edge> tree;
    if (n == 2) {
        tree.push_back({0, 1});
    } else {
        std::vector<int> seq(n - 2);
        for (int& s : seq) s = rng.below(n);
        tree = decode_pruefer(seq, n);
    }
    std::sort(tree.begin(), tree.end());
    std::vector<Edge> edges = tree;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            Edge e{u, v};
            bool tree_edge = std::binary_search(tree.begin(), tree.end(), e);
            if (!tree_edge && (rng.next() & 1)) edges.push_back(e);
        }
    return Graph(n, std::move(edges));
}

}  // namespace steiner
