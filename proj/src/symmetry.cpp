#include "steiner/symmetry.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

namespace steiner {

Permutation::Permutation(std::vector<int> image, const Graph& g) : image_(std::move(image)) {
    const int n = g.order();
    if (static_cast<int>(image_.size()) != n)
        throw std::invalid_argument("permutation size does not match the graph order");
    std::vector<bool> hit(n, false);
    for (int v : image_) {
        if (v < 0 || v >= n || hit[v]) throw std::invalid_argument("image is not a bijection");
        hit[v] = true;
    }
    for (const Edge& e : g.edges())
        if (!g.has_edge(image_[e.u], image_[e.v]))
            throw std::invalid_argument("image does not preserve the edge set");
}

VertexMask Permutation::apply(VertexMask m) const {
    VertexMask out = 0;
    while (m) {
        int v = std::countr_zero(m);
        m &= m - 1;
        out |= vertex_bit(image_[v]);
    }
    return out;
}

namespace {

struct AutSearch {
    const Graph& g;
    std::size_t group_cap;
    std::vector<std::uint64_t> invariant;  // degree + sorted neighbor-degree profile
    std::vector<int> image;
    std::vector<bool> used;
    std::vector<std::vector<int>> found;

    explicit AutSearch(const Graph& graph, std::size_t cap) : g(graph), group_cap(cap) {
        const int n = g.order();
        invariant.resize(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> nbr_degs;
            for (VertexMask m = g.adjacency(v); m;) {
                int w = std::countr_zero(m);
                m &= m - 1;
                nbr_degs.push_back(g.degree(w));
            }
            std::sort(nbr_degs.begin(), nbr_degs.end());
            std::uint64_t h = g.degree(v);
            for (int d : nbr_degs) h = h * 131 + d;
            invariant[v] = h;
        }
        image.assign(n, -1);
        used.assign(n, false);
    }

    void run(int depth) {
        const int n = g.order();
        if (depth == n) {
            found.push_back(image);
            if (found.size() > group_cap)
                throw cap_error("automorphism group exceeds the size cap");
            return;
        }
        for (int w = 0; w < n; ++w) {
            if (used[w] || invariant[w] != invariant[depth]) continue;
            bool ok = true;
            for (int j = 0; j < depth && ok; ++j)
                if (g.has_edge(depth, j) != g.has_edge(w, image[j])) ok = false;
            if (!ok) continue;
            used[w] = true;
            image[depth] = w;
            run(depth + 1);
            used[w] = false;
        }
        image[depth] = -1;
    }
};

}  // namespace

std::vector<Permutation> automorphisms(const Graph& g, int order_cap, std::size_t group_cap) {
    if (g.order() > order_cap)
        throw cap_error("automorphism search capped at n <= " + std::to_string(order_cap));
    AutSearch search(g, group_cap);
    search.run(0);
    std::vector<Permutation> group;
    group.reserve(search.found.size());
    for (std::vector<int>& img : search.found) group.emplace_back(std::move(img), g);
    return group;
}

OrbitPartition edge_orbits(const Graph& g) {
    std::vector<Permutation> group = automorphisms(g);
    OrbitPartition part;
    std::set<Edge> visited;
    for (const Edge& e : g.edges()) {
        if (visited.contains(e)) continue;
        std::set<Edge> orbit;
        for (const Permutation& sigma : group) orbit.insert(sigma.apply(e));
        part.orbits.emplace_back(orbit.begin(), orbit.end());
        part.representatives.push_back(e);  // least of its orbit: earlier edges are all visited
        visited.insert(orbit.begin(), orbit.end());
    }
    return part;
}

namespace {

template <typename Acc, typename Term>
Acc orbit_sum(const Graph& g, int k, Term term) {
    const int n = g.order();
    if (n > 16) throw cap_error("Steiner Szeged indices support n <= 16");
    if (k < 2 || k > n - 1) throw std::invalid_argument("k out of range 2..n-1");
    OrbitPartition part = edge_orbits(g);
    SteinerTable table = build_steiner_table_any_k(g, k);
    Acc total{};
    for (std::size_t i = 0; i < part.orbits.size(); ++i) {
        EdgeClassification c = classify_edge(table, g, part.representatives[i], k);
        total += static_cast<std::int64_t>(part.orbits[i].size()) * term(c);
    }
    return total;
}

}  // namespace

std::int64_t sz_k_via_orbits(const Graph& g, int k) {
    return orbit_sum<std::int64_t>(g, k,
                                   [](const EdgeClassification& c) { return c.sz_term(); });
}

QuarterRational rsz_k_via_orbits(const Graph& g, int k) {
    return orbit_sum<QuarterRational>(g, k,
                                      [](const EdgeClassification& c) { return c.rsz_term(); });
}

}  // namespace steiner
