#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "steiner/steiner_distance.hpp"

namespace steiner {

/// Exact nonnegative rational with fixed denominator 4. Every revised
/// Szeged value is a sum of products of two half-integers, so this type is
/// closed under everything the indices need; floating point never enters.
class QuarterRational {
public:
    constexpr QuarterRational() = default;

    static constexpr QuarterRational from_int(std::int64_t v) { return QuarterRational(v * 4); }
    static constexpr QuarterRational from_quarters(std::int64_t q) { return QuarterRational(q); }
    /// Product of two values given in half-units (numerators over 2).
    static constexpr QuarterRational half_product(std::int64_t a, std::int64_t b) {
        return QuarterRational(a * b);
    }

    std::int64_t quarters() const { return num4_; }
    bool is_integer() const { return num4_ % 4 == 0; }

    QuarterRational& operator+=(QuarterRational o) {
        num4_ += o.num4_;
        return *this;
    }
    friend QuarterRational operator+(QuarterRational a, QuarterRational b) { return a += b; }
    friend QuarterRational operator*(std::int64_t c, QuarterRational q) {
        return QuarterRational(c * q.num4_);
    }
    friend auto operator<=>(const QuarterRational&, const QuarterRational&) = default;

    /// Reduced form: "6", "25/4", "125/2".
    std::string str() const;

private:
    constexpr explicit QuarterRational(std::int64_t q) : num4_(q) {}
    std::int64_t num4_ = 0;
};

/// Counts of the (k-1)-subsets S' of V \ {u,v} classified by comparing
/// d(S' + u) against d(S' + v). The three counts partition all eligible
/// subsets: n_u + n_v + n_0 = C(n-2, k-1).
struct EdgeClassification {
    Edge edge;
    int k = 0;
    std::int64_t n_u = 0;
    std::int64_t n_v = 0;
    std::int64_t n_0 = 0;

    std::int64_t eligible() const { return n_u + n_v + n_0; }
    std::int64_t sz_term() const { return (n_u + 1) * (n_v + 1); }
    QuarterRational rsz_term() const {
        return QuarterRational::half_product(2 * (n_u + 1) + n_0, 2 * (n_v + 1) + n_0);
    }
};

EdgeClassification classify_edge(const SteinerTable& table, const Graph& g, Edge e, int k);

/// Same classification with every Steiner distance taken from the
/// brute-force oracle; used for cross-checks and witnesses.
EdgeClassification classify_edge_oracle(const Graph& g, Edge e, int k);

/// kth Steiner Szeged index, 2 <= k <= n-1, n <= 16. Exact.
std::int64_t sz_k(const Graph& g, int k);

/// kth Steiner revised Szeged index; same range, exact quarter-rational.
QuarterRational rsz_k(const Graph& g, int k);

/// Classical per-edge vertex split: vertices strictly closer to u, strictly
/// closer to v, equidistant (u and v themselves land in their own sides).
struct VertexSplit {
    std::int64_t n_u = 0;
    std::int64_t n_v = 0;
    std::int64_t n_0 = 0;
};

VertexSplit classical_split(const DistanceMatrix& d, Edge e);

std::int64_t classical_szeged(const Graph& g);
QuarterRational classical_revised_szeged(const Graph& g);

}  // namespace steiner
