#pragma once

#include <cstddef>
#include <vector>

#include "steiner/szeged.hpp"

namespace steiner {

/// Vertex bijection validated as a graph automorphism on construction.
class Permutation {
public:
    Permutation(std::vector<int> image, const Graph& g);

    int size() const { return static_cast<int>(image_.size()); }
    int operator()(int v) const { return image_[v]; }
    const std::vector<int>& image() const { return image_; }

    Edge apply(Edge e) const { return make_edge(image_[e.u], image_[e.v]); }
    VertexMask apply(VertexMask m) const;

    friend bool operator==(const Permutation& a, const Permutation& b) {
        return a.image_ == b.image_;
    }

private:
    std::vector<int> image_;
};

inline constexpr int kAutomorphismOrderCap = 12;
inline constexpr std::size_t kAutomorphismGroupCap = 1'000'000;

/// The full automorphism group as an explicit list, found by backtracking
/// over vertex images with degree and neighbor-degree pruning. The list is
/// sorted lexicographically by image and always contains the identity.
std::vector<Permutation> automorphisms(const Graph& g, int order_cap = kAutomorphismOrderCap,
                                       std::size_t group_cap = kAutomorphismGroupCap);

/// Partition of E(g) into orbits under the automorphism group, each orbit
/// sorted, orbits ordered by their lexicographically least edge (which is
/// the representative).
struct OrbitPartition {
    std::vector<std::vector<Edge>> orbits;
    std::vector<Edge> representatives;
};

OrbitPartition edge_orbits(const Graph& g);

/// Index values computed by classifying one representative edge per orbit
/// and weighting by orbit size; always equals the direct computation.
std::int64_t sz_k_via_orbits(const Graph& g, int k);
QuarterRational rsz_k_via_orbits(const Graph& g, int k);

}  // namespace steiner
