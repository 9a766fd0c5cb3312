#pragma once

#include <cstdint>
#include <vector>

#include "steiner/graph.hpp"

namespace steiner {

/// Pairwise shortest-path lengths of a connected graph.
class DistanceMatrix {
public:
    DistanceMatrix() = default;
    explicit DistanceMatrix(int n) : n_(n), d_(static_cast<std::size_t>(n) * n, 0) {}

    int order() const { return n_; }
    int at(int i, int j) const { return d_[static_cast<std::size_t>(i) * n_ + j]; }
    void set(int i, int j, int value) { d_[static_cast<std::size_t>(i) * n_ + j] = value; }

private:
    int n_ = 0;
    std::vector<int> d_;
};

DistanceMatrix all_pairs_distances(const Graph& g);

/// Exact Steiner distance d_G(S): minimum number of edges of a subtree of g
/// whose vertex set contains S. Subset dynamic programming over terminal
/// masks with shortest-path relaxation; |S| <= 16 unless S is a singleton,
/// a pair, or the whole vertex set.
int steiner_distance(const Graph& g, VertexMask terminals);

/// Same contract as steiner_distance, computed by a structurally different
/// method: the smallest L such that some (L+1)-vertex superset of S induces
/// a connected subgraph. Independent verification oracle; n <= 20.
int steiner_distance_oracle(const Graph& g, VertexMask terminals);

/// Steiner distances for every subset of size 2..k_max of a graph with
/// n <= 16, keyed by subset bit mask, plus the pairwise distance matrix.
/// Immutable once built.
class SteinerTable {
public:
    /// Spec-capped builder: 2 <= k <= min(n-1, 8).
    static SteinerTable build(const Graph& g, int k);

    int order() const { return n_; }
    int k_max() const { return k_max_; }
    int distance(VertexMask subset) const;
    const DistanceMatrix& pairwise() const { return apsp_; }

private:
    friend SteinerTable build_steiner_table_any_k(const Graph& g, int k);
    SteinerTable() = default;

    int n_ = 0;
    int k_max_ = 0;
    std::vector<std::int16_t> dist_;  // indexed by mask, -1 = not covered
    DistanceMatrix apsp_;
};

/// Internal builder used by the index computations: allows any
/// 2 <= k <= n-1 on graphs with n <= 16 (the full-mask DP is still cheap
/// at that order).
SteinerTable build_steiner_table_any_k(const Graph& g, int k);

/// kth Steiner Wiener index: sum of d_G(S) over all subsets of size k,
/// 2 <= k <= n, n <= 16.
std::int64_t steiner_wiener(const Graph& g, int k);

}  // namespace steiner
