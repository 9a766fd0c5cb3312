#include "steiner/szeged.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace steiner {

std::string QuarterRational::str() const {
    if (num4_ % 4 == 0) return std::to_string(num4_ / 4);
    if (num4_ % 2 == 0) return std::to_string(num4_ / 2) + "/2";
    return std::to_string(num4_) + "/4";
}

namespace {

void check_edge(const Graph& g, Edge e) {
    if (e.u < 0 || e.v >= g.order() || !g.has_edge(e.u, e.v))
        throw std::invalid_argument(edge_str(e) + " is not an edge");
}

// Runs fn over every (k-1)-subset of V \ {u,v}, enumerated directly over
// the eligible vertices in canonical order. The u,v exclusion is
// load-bearing: it is what makes Sz_2 coincide with the classical index.
void for_each_eligible_subset(int n, Edge e, int k,
                              const std::function<void(VertexMask)>& fn) {
    std::vector<int> eligible;
    eligible.reserve(n - 2);
    for (int v = 0; v < n; ++v)
        if (v != e.u && v != e.v) eligible.push_back(v);
    const int r = k - 1;
    std::vector<int> pick(r);
    for (int i = 0; i < r; ++i) pick[i] = i;
    for (;;) {
        VertexMask s = 0;
        for (int i = 0; i < r; ++i) s |= vertex_bit(eligible[pick[i]]);
        fn(s);
        int i = r - 1;
        while (i >= 0 && pick[i] == static_cast<int>(eligible.size()) - r + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < r; ++j) pick[j] = pick[j - 1] + 1;
    }
}

EdgeClassification classify_with(const Graph& g, Edge e, int k,
                                 const std::function<int(VertexMask)>& dist) {
    check_edge(g, e);
    if (k < 2 || k > g.order() - 1) throw std::invalid_argument("k out of range 2..n-1");
    EdgeClassification c{e, k, 0, 0, 0};
    for_each_eligible_subset(g.order(), e, k, [&](VertexMask s) {
        int du = dist(s | vertex_bit(e.u));
        int dv = dist(s | vertex_bit(e.v));
        if (du < dv)
            ++c.n_u;
        else if (dv < du)
            ++c.n_v;
        else
            ++c.n_0;
    });
    return c;
}

}  // namespace

EdgeClassification classify_edge(const SteinerTable& table, const Graph& g, Edge e, int k) {
    if (k > table.k_max()) throw std::invalid_argument("table does not cover subsets of size k");
    return classify_with(g, e, k, [&](VertexMask s) { return table.distance(s); });
}

EdgeClassification classify_edge_oracle(const Graph& g, Edge e, int k) {
    return classify_with(g, e, k, [&](VertexMask s) { return steiner_distance_oracle(g, s); });
}

namespace {

template <typename Acc, typename Term>
Acc sum_over_edges(const Graph& g, int k, Term term) {
    const int n = g.order();
    if (n > 16) throw cap_error("Steiner Szeged indices support n <= 16");
    if (k < 2 || k > n - 1) throw std::invalid_argument("k out of range 2..n-1");
    SteinerTable table = build_steiner_table_any_k(g, k);  // rejects disconnected input
    Acc total{};
    for (const Edge& e : g.edges()) total += term(classify_edge(table, g, e, k));
    return total;
}

}  // namespace

std::int64_t sz_k(const Graph& g, int k) {
    return sum_over_edges<std::int64_t>(g, k,
                                        [](const EdgeClassification& c) { return c.sz_term(); });
}

QuarterRational rsz_k(const Graph& g, int k) {
    return sum_over_edges<QuarterRational>(
        g, k, [](const EdgeClassification& c) { return c.rsz_term(); });
}

VertexSplit classical_split(const DistanceMatrix& d, Edge e) {
    VertexSplit s;
    for (int w = 0; w < d.order(); ++w) {
        int du = d.at(w, e.u), dv = d.at(w, e.v);
        if (du < dv)
            ++s.n_u;
        else if (dv < du)
            ++s.n_v;
        else
            ++s.n_0;
    }
    return s;
}

std::int64_t classical_szeged(const Graph& g) {
    DistanceMatrix d = all_pairs_distances(g);
    std::int64_t total = 0;
    for (const Edge& e : g.edges()) {
        VertexSplit s = classical_split(d, e);
        total += s.n_u * s.n_v;
    }
    return total;
}

QuarterRational classical_revised_szeged(const Graph& g) {
    DistanceMatrix d = all_pairs_distances(g);
    QuarterRational total;
    for (const Edge& e : g.edges()) {
        VertexSplit s = classical_split(d, e);
        total += QuarterRational::half_product(2 * s.n_u + s.n_0, 2 * s.n_v + s.n_0);
    }
    return total;
}

}  // namespace steiner
