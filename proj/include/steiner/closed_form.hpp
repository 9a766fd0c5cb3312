#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "steiner/szeged.hpp"

namespace steiner {

/// C(a, b) with the convention C = 0 for b < 0 or b > a, exact for
/// 0 <= a <= 64. The zero convention is what lets the closed forms degrade
/// gracefully at boundary k.
std::uint64_t binomial(int a, int b);

// ---- trees ---------------------------------------------------------------

/// Sz_k of a tree from the component sizes of T - e:
/// sum over edges of (C(n_u-1, k-1) + 1)(C(n_v-1, k-1) + 1).
std::int64_t sz_tree_formula(const Graph& tree, int k);

/// Path P_n, edges indexed 1..n-1 (edge i joins the i-th and (i+1)-th
/// vertex along the path).
std::int64_t sz_path_formula(int n, int k);
std::int64_t n0_path(int n, int k, int edge_index);
QuarterRational rsz_path_formula(int n, int k);

/// Star with `leaves` pendant vertices (order leaves+1): Sz_k =
/// leaves * C(leaves-1, k-1) + leaves, and rSz_k = Sz_k on stars.
std::int64_t sz_star_formula(int leaves, int k);

// ---- complete and complete multipartite graphs ---------------------------

std::int64_t sz_complete_formula(int n, int k);

/// rSz_k(K_n) exactly as published: |E| * C(n-2, k-1)^2. Conflicts with the
/// displayed definition; kept verbatim so the harness can compare it.
std::int64_t rsz_complete_paper(int n, int k);

/// rSz_k(K_n) forced by the definition with n_u = n_v = 0 and
/// n_0 = C(n-2, k-1): |E| * (C(n-2, k-1)/2 + 1)^2.
QuarterRational rsz_complete_corrected(int n, int k);

/// Complete multipartite K_{a_1..a_m}; all three require 2 <= k <= min a_i.
/// Part indices i, j are 0-based positions into `parts`.
std::int64_t sz_multipartite_formula(std::span<const int> parts, int k);
std::int64_t n0_multipartite_paper(std::span<const int> parts, int i, int j, int k);
std::int64_t n0_multipartite_corrected(std::span<const int> parts, int i, int j, int k);

// ---- k = n-1 -------------------------------------------------------------

/// Trees of order n with p pendant edges: Sz_{n-1} = n + p - 1 and
/// rSz_{n-1} = 2p + (9/4)(n - p - 1).
std::int64_t sz_penult_tree(int n, int p);
QuarterRational rsz_penult_tree(int n, int p);

/// The published k = n-1 formulas for a general connected graph of size m
/// with p pendant edges: Sz_{n-1} = p + m, rSz_{n-1} = 2p + (9/4)(m - p).
/// They hold only when every non-pendant edge uv has d(V-u) = d(V-v); the
/// verify harness records where they fail.
std::int64_t sz_penult_graph_paper(int m, int p);
QuarterRational rsz_penult_graph_paper(int m, int p);

// ---- bounds --------------------------------------------------------------

struct SzBounds {
    std::int64_t lower = 0;
    std::int64_t upper = 0;
};

/// m <= Sz_k(G) <= m(ceil(C(n-2,k-1)/2)+1)(floor(C(n-2,k-1)/2)+1).
SzBounds sz_bounds(int n, int m, int k);

// ---- formula registry ----------------------------------------------------

struct FormulaResult {
    std::string formula_id;
    QuarterRational value;
    std::string status_note;  // erratum annotation; empty for clean formulas
};

struct FormulaInfo {
    std::string_view id;
    std::string_view status_note;
};

/// Closed registry of the implemented closed forms. Suspect formulas carry
/// a status note; the library never silently substitutes a corrected
/// variant for a published one.
std::span<const FormulaInfo> formula_registry();

/// Note for a registered id; throws std::invalid_argument on unknown ids.
std::string_view formula_status_note(std::string_view formula_id);

FormulaResult make_formula_result(std::string_view id, QuarterRational value);

}  // namespace steiner
