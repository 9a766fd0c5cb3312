#include "steiner/closed_form.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>

namespace steiner {

std::uint64_t binomial(int a, int b) {
    if (a < 0 || a > 64) throw std::invalid_argument("binomial supports 0 <= a <= 64");
    if (b < 0 || b > a) return 0;
    static const auto table = [] {
        std::array<std::array<std::uint64_t, 65>, 65> c{};
        for (int i = 0; i <= 64; ++i) {
            c[i][0] = 1;
            for (int j = 1; j <= i; ++j)
                c[i][j] = c[i - 1][j - 1] + (j <= i - 1 ? c[i - 1][j] : 0);
        }
        return c;
    }();
    return table[a][b];
}

namespace {

std::int64_t bi(int a, int b) {
    return static_cast<std::int64_t>(binomial(a, b));
}

std::int64_t mul_checked(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("formula value overflows");
    return r;
}

void check_k(int k, int hi, const char* what) {
    if (k < 2 || k > hi) throw std::invalid_argument(std::string(what) + ": k out of range");
}

int side_size(const Graph& g, Edge e, int side) {
    // size of the component of g - e containing `side`
    VertexMask reached = vertex_bit(side);
    for (;;) {
        VertexMask frontier = reached, next = reached;
        while (frontier) {
            int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            VertexMask nb = g.adjacency(v);
            if (v == e.u) nb &= ~vertex_bit(e.v);
            if (v == e.v) nb &= ~vertex_bit(e.u);
            next |= nb;
        }
        if (next == reached) break;
        reached = next;
    }
    return std::popcount(reached);
}

}  // namespace

std::int64_t sz_tree_formula(const Graph& tree, int k) {
    if (!is_tree(tree)) throw std::invalid_argument("input is not a tree");
    const int n = tree.order();
    check_k(k, n - 1, "sz_tree_formula");
    std::int64_t total = 0;
    for (const Edge& e : tree.edges()) {
        int nu = side_size(tree, e, e.u);
        int nv = n - nu;
        total += mul_checked(bi(nu - 1, k - 1) + 1, bi(nv - 1, k - 1) + 1);
    }
    return total;
}

std::int64_t sz_path_formula(int n, int k) {
    check_k(k, n - 1, "sz_path_formula");
    std::int64_t total = 0;
    for (int i = 1; i <= n - 1; ++i)
        total += mul_checked(bi(i - 1, k - 1) + 1, bi(n - i - 1, k - 1) + 1);
    return total;
}

std::int64_t n0_path(int n, int k, int edge_index) {
    check_k(k, n - 1, "n0_path");
    if (edge_index < 1 || edge_index > n - 1)
        throw std::invalid_argument("n0_path: edge index out of range 1..n-1");
    std::int64_t total = 0;
    for (int j = 1; j <= k - 2; ++j)
        total += mul_checked(bi(edge_index - 1, j), bi(n - edge_index - 1, k - j - 1));
    return total;
}

QuarterRational rsz_path_formula(int n, int k) {
    check_k(k, n - 1, "rsz_path_formula");
    QuarterRational total;
    for (int i = 1; i <= n - 1; ++i) {
        std::int64_t nu = bi(i - 1, k - 1), nv = bi(n - i - 1, k - 1);
        std::int64_t n0 = n0_path(n, k, i);
        total += QuarterRational::half_product(2 * (nu + 1) + n0, 2 * (nv + 1) + n0);
    }
    return total;
}

std::int64_t sz_star_formula(int leaves, int k) {
    check_k(k, leaves, "sz_star_formula");
    return mul_checked(leaves, bi(leaves - 1, k - 1)) + leaves;
}

std::int64_t sz_complete_formula(int n, int k) {
    check_k(k, n - 1, "sz_complete_formula");
    return static_cast<std::int64_t>(n) * (n - 1) / 2;
}

std::int64_t rsz_complete_paper(int n, int k) {
    check_k(k, n - 1, "rsz_complete_paper");
    std::int64_t c = bi(n - 2, k - 1);
    return mul_checked(static_cast<std::int64_t>(n) * (n - 1) / 2, mul_checked(c, c));
}

QuarterRational rsz_complete_corrected(int n, int k) {
    check_k(k, n - 1, "rsz_complete_corrected");
    // (C/2 + 1)^2 = (C + 2)^2 / 4 per edge
    std::int64_t h = bi(n - 2, k - 1) + 2;
    return QuarterRational::from_quarters(
        mul_checked(static_cast<std::int64_t>(n) * (n - 1) / 2, mul_checked(h, h)));
}

namespace {

int check_parts(std::span<const int> parts, int k) {
    if (parts.size() < 2) throw std::invalid_argument("need at least two part sizes");
    int n = 0, min_part = parts[0];
    for (int a : parts) {
        if (a < 1) throw std::invalid_argument("part sizes must be >= 1");
        n += a;
        min_part = std::min(min_part, a);
    }
    if (k < 2 || k > min_part)
        throw std::invalid_argument("hypothesis violation: need 2 <= k <= min part size");
    return n;
}

void check_part_indices(std::span<const int> parts, int i, int j) {
    if (i < 0 || j < 0 || i >= static_cast<int>(parts.size()) ||
        j >= static_cast<int>(parts.size()) || i == j)
        throw std::invalid_argument("part indices must be distinct and in range");
}

}  // namespace

std::int64_t sz_multipartite_formula(std::span<const int> parts, int k) {
    check_parts(parts, k);
    std::int64_t total = 0;
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = i + 1; j < parts.size(); ++j) {
            std::int64_t term = mul_checked(bi(parts[i] - 1, k - 1) + 1, bi(parts[j] - 1, k - 1) + 1);
            total += mul_checked(static_cast<std::int64_t>(parts[i]) * parts[j], term);
        }
    return total;
}

std::int64_t n0_multipartite_paper(std::span<const int> parts, int i, int j, int k) {
    int n = check_parts(parts, k);
    check_part_indices(parts, i, j);
    const int ai = parts[i], aj = parts[j];
    const int b = n - ai - aj;
    std::int64_t total = bi(b, k - 1);
    for (int p = 1; p <= ai - 2; ++p)
        for (int q = 1; q <= k - 1 - p; ++q)
            total += mul_checked(mul_checked(bi(ai - 2, p), bi(aj - 1, q)), bi(b, k - 1 - p - q));
    return total;
}

std::int64_t n0_multipartite_corrected(std::span<const int> parts, int i, int j, int k) {
    int n = check_parts(parts, k);
    check_part_indices(parts, i, j);
    return bi(n - 2, k - 1) - bi(parts[i] - 1, k - 1) - bi(parts[j] - 1, k - 1);
}

std::int64_t sz_penult_tree(int n, int p) {
    if (n < 3 || p < 2 || p > n - 1)
        throw std::invalid_argument("tree parameters need n >= 3 and 2 <= p <= n-1");
    return n + p - 1;
}

QuarterRational rsz_penult_tree(int n, int p) {
    if (n < 3 || p < 2 || p > n - 1)
        throw std::invalid_argument("tree parameters need n >= 3 and 2 <= p <= n-1");
    return QuarterRational::from_quarters(8ll * p + 9ll * (n - p - 1));
}

std::int64_t sz_penult_graph_paper(int m, int p) {
    if (m < 1 || p < 0 || p > m) throw std::invalid_argument("need m >= 1 and 0 <= p <= m");
    return static_cast<std::int64_t>(p) + m;
}

QuarterRational rsz_penult_graph_paper(int m, int p) {
    if (m < 1 || p < 0 || p > m) throw std::invalid_argument("need m >= 1 and 0 <= p <= m");
    return QuarterRational::from_quarters(8ll * p + 9ll * (m - p));
}

SzBounds sz_bounds(int n, int m, int k) {
    check_k(k, n - 1, "sz_bounds");
    if (m < 0) throw std::invalid_argument("negative edge count");
    std::int64_t c = bi(n - 2, k - 1);
    std::int64_t upper = mul_checked(m, mul_checked((c + 1) / 2 + 1, c / 2 + 1));
    return {m, upper};
}

namespace {

constexpr FormulaInfo kRegistry[] = {
    {"thm2.1", ""},
    {"ex2.1-sz", ""},
    {"ex2.1-n0", ""},
    {"ex2.2", ""},
    {"ex3.1-sz", ""},
    {"ex3.1-rsz-paper", "as printed; conflicts with the displayed rSz_k definition"},
    {"ex3.1-rsz-corrected", "paper formula omits /2 and +1"},
    {"thm3.3-sz", ""},
    {"thm3.3-n0-paper",
     "double sum misses subsets meeting exactly one of the two parts together with B; see "
     "verify findings"},
    {"thm3.3-n0-corrected", "forced by the partition identity and the strict-inequality cases"},
    {"thm4.1-sz", ""},
    {"thm4.1-rsz", ""},
    {"thm4.2-sz-paper",
     "holds only when every non-pendent edge uv has d(V-u) = d(V-v); see verify findings"},
    {"thm4.2-rsz-paper",
     "holds only when every non-pendent edge uv has d(V-u) = d(V-v); see verify findings"},
    {"thm5.1-bounds", ""},
};

}  // namespace

std::span<const FormulaInfo> formula_registry() {
    return kRegistry;
}

std::string_view formula_status_note(std::string_view formula_id) {
    for (const FormulaInfo& f : kRegistry)
        if (f.id == formula_id) return f.status_note;
    throw std::invalid_argument("unknown formula id: " + std::string(formula_id));
}

FormulaResult make_formula_result(std::string_view id, QuarterRational value) {
    return FormulaResult{std::string(id), value, std::string(formula_status_note(id))};
}

}  // namespace steiner
