#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "steiner/closed_form.hpp"
#include "steiner/symmetry.hpp"

namespace steiner {

enum class FindingStatus { confirmed, counterexample };

std::string_view to_string(FindingStatus s);

/// Outcome of checking one claim on one instance. `expected` is the value
/// of the formula under test (an interval "[lo,hi]" for bound claims);
/// `actual` is always produced by the direct oracle path, never by the
/// formula being checked. Counterexamples carry a human-checkable witness.
struct Finding {
    std::string claim;
    std::string instance;
    int k = 0;
    std::string index;  // "sz", "rsz", "n0", "orbit-count", ...
    std::string expected;
    std::string actual;
    FindingStatus status = FindingStatus::confirmed;
    std::string witness;
};

/// Instance ranges for a verification run. k == 0 means every valid k.
/// Claims tied to a specific k (thm4.1, thm4.2, remark1) ignore the k
/// filter. When max_n > 7 the exhaustive corpus is extended with
/// `random_count` seeded random connected graphs of order 8..min(max_n,10).
struct CorpusSpec {
    int max_n = 6;
    int k = 0;
    std::uint64_t seed = 12345;
    int random_count = 200;
};

const std::vector<std::string>& claim_ids();

/// True for claims whose proofs are sound, so a counterexample indicates a
/// bug in this library rather than an erratum.
bool claim_is_sound(std::string_view claim);

/// Runs one claim over its corpus and returns one finding per instance in
/// deterministic order. "conjecture" is handled by conjecture_scan instead.
std::vector<Finding> verify_claim(const std::string& claim, const CorpusSpec& spec);

struct ConjectureViolation {
    int n = 0;
    std::string t1, t2;  // graph6 descriptors
    std::int64_t szk1 = 0, szk2 = 0;
    std::int64_t sz1 = 0, sz2 = 0;
};

/// Result of scanning tree pairs for sign conflicts between Sz_k and the
/// classical Szeged index. Pairs tied in exactly one of the two indices are
/// counted separately: the claim's biconditional is ambiguous under ties.
struct ConjectureReport {
    int n_max = 0;
    int k = 0;
    std::int64_t pairs_checked = 0;
    std::vector<ConjectureViolation> violations;
    std::int64_t tie_pairs = 0;
};

/// Exhaustive within-order pairwise comparison over all trees of each order
/// up to n_max (orders below k+1 contribute nothing). n_max <= 9, k >= 3.
ConjectureReport conjecture_scan(int n_max, int k);

/// Checks that over all trees of order n the star uniquely minimizes and
/// the path uniquely maximizes rSz_{n-1}. 3 <= n <= 9.
Finding remark1_extremality(int n);

}  // namespace steiner
