#include "steiner/steiner_distance.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>

namespace steiner {

namespace {

constexpr std::int16_t kUnreached = 0x3fff;

void check_terminals(const Graph& g, VertexMask terminals) {
    if (terminals == 0) throw std::invalid_argument("empty vertex subset");
    if (terminals & ~g.full_mask()) throw std::invalid_argument("vertex out of range");
}

void bfs_row(const Graph& g, int source, std::vector<int>& row) {
    const int n = g.order();
    row.assign(n, -1);
    row[source] = 0;
    VertexMask frontier = vertex_bit(source);
    int depth = 0;
    VertexMask seen = frontier;
    while (frontier) {
        ++depth;
        VertexMask next = 0;
        while (frontier) {
            int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            next |= g.adjacency(v);
        }
        next &= ~seen;
        seen |= next;
        for (VertexMask m = next; m;) {
            int v = std::countr_zero(m);
            m &= m - 1;
            row[v] = depth;
        }
        frontier = next;
    }
}

// Dreyfus-Wagner over an explicit terminal list: dp[mask][v] is the size of
// the smallest subtree containing {terminals in mask} + v. Masks are
// processed in increasing numeric order (every proper submask is smaller),
// each one closed under subset merges at a vertex and then under
// shortest-path relaxation through the metric.
std::vector<std::int16_t> dreyfus_wagner(const DistanceMatrix& apsp,
                                         const std::vector<int>& terminals, int mask_limit) {
    const int n = apsp.order();
    const int t = static_cast<int>(terminals.size());
    std::vector<std::int16_t> dp((static_cast<std::size_t>(1) << t) * n, kUnreached);
    for (int i = 0; i < t; ++i)
        for (int v = 0; v < n; ++v)
            dp[(static_cast<std::size_t>(1) << i) * n + v] =
                static_cast<std::int16_t>(apsp.at(terminals[i], v));
    std::vector<std::int16_t> merged(n);
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << t); ++mask) {
        if (std::popcount(mask) < 2) continue;
        if (mask_limit > 0 && std::popcount(mask) > mask_limit) continue;
        const std::size_t base = static_cast<std::size_t>(mask) * n;
        const std::uint32_t low = mask & -mask;
        for (int v = 0; v < n; ++v) {
            std::int16_t best = kUnreached;
            for (std::uint32_t sub = (mask - 1) & mask; sub; sub = (sub - 1) & mask) {
                if (!(sub & low)) continue;  // each split visited once
                std::int16_t cand = static_cast<std::int16_t>(
                    dp[static_cast<std::size_t>(sub) * n + v] +
                    dp[static_cast<std::size_t>(mask ^ sub) * n + v]);
                best = std::min(best, cand);
            }
            merged[v] = best;
        }
        for (int v = 0; v < n; ++v) {
            std::int16_t best = merged[v];
            for (int u = 0; u < n; ++u)
                best = std::min(best,
                                static_cast<std::int16_t>(merged[u] + apsp.at(u, v)));
            dp[base + v] = best;
        }
    }
    return dp;
}

}  // namespace

DistanceMatrix all_pairs_distances(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("graph is disconnected");
    const int n = g.order();
    DistanceMatrix d(n);
    std::vector<int> row;
    for (int s = 0; s < n; ++s) {
        bfs_row(g, s, row);
        for (int v = 0; v < n; ++v) d.set(s, v, row[v]);
    }
    return d;
}

int steiner_distance(const Graph& g, VertexMask terminals) {
    check_terminals(g, terminals);
    if (!is_connected(g)) throw std::invalid_argument("graph is disconnected");
    const int n = g.order();
    const int size = std::popcount(terminals);
    if (size == 1) return 0;
    if (terminals == g.full_mask()) return n - 1;
    if (size == 2) {
        int a = std::countr_zero(terminals);
        int b = std::countr_zero(terminals & (terminals - 1));
        std::vector<int> row;
        bfs_row(g, a, row);
        return row[b];
    }
    if (size > 16) throw cap_error("steiner_distance supports |S| <= 16");
    std::vector<int> terms;
    for (VertexMask m = terminals; m;) {
        terms.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    DistanceMatrix apsp = all_pairs_distances(g);
    std::vector<std::int16_t> dp = dreyfus_wagner(apsp, terms, 0);
    return dp[((static_cast<std::size_t>(1) << size) - 1) * n + terms[0]];
}

int steiner_distance_oracle(const Graph& g, VertexMask terminals) {
    check_terminals(g, terminals);
    if (g.order() > 20) throw cap_error("steiner_distance_oracle supports n <= 20");
    if (!is_connected(g)) throw std::invalid_argument("graph is disconnected");
    const int n = g.order();
    const int size = std::popcount(terminals);
    if (size == 1) return 0;
    std::vector<int> others;
    for (int v = 0; v < n; ++v)
        if (!(terminals >> v & 1)) others.push_back(v);
    for (int length = size - 1; length <= n - 1; ++length) {
        const int extra = length + 1 - size;
        // every superset of the terminals with length+1 vertices
        std::vector<int> pick(extra);
        for (int i = 0; i < extra; ++i) pick[i] = i;
        for (;;) {
            VertexMask w = terminals;
            for (int i = 0; i < extra; ++i) w |= vertex_bit(others[pick[i]]);
            if (connected_induced(g, w)) return length;
            int i = extra - 1;
            while (i >= 0 && pick[i] == static_cast<int>(others.size()) - extra + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < extra; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    throw std::logic_error("no connecting superset found in a connected graph");
}

SteinerTable SteinerTable::build(const Graph& g, int k) {
    const int n = g.order();
    if (n > 16) throw cap_error("SteinerTable supports n <= 16");
    if (k < 2 || k > std::min(n - 1, 8))
        throw std::invalid_argument("k out of range 2..min(n-1, 8)");
    return build_steiner_table_any_k(g, k);
}

SteinerTable build_steiner_table_any_k(const Graph& g, int k) {
    const int n = g.order();
    if (n > 16) throw cap_error("SteinerTable supports n <= 16");
    if (k < 2 || k > n - 1) throw std::invalid_argument("k out of range 2..n-1");
    DistanceMatrix apsp = all_pairs_distances(g);  // also rejects disconnected input
    std::vector<int> all(n);
    for (int v = 0; v < n; ++v) all[v] = v;
    std::vector<std::int16_t> dp = dreyfus_wagner(apsp, all, k - 1);
    SteinerTable table;
    table.n_ = n;
    table.k_max_ = k;
    table.apsp_ = std::move(apsp);
    table.dist_.assign(static_cast<std::size_t>(1) << n, -1);
    for (VertexMask s = 3; s < vertex_bit(n); ++s) {
        int size = std::popcount(s);
        if (size < 2 || size > k) continue;
        VertexMask rest = s & (s - 1);
        table.dist_[s] = dp[static_cast<std::size_t>(rest) * n + std::countr_zero(s)];
    }
    return table;
}

int SteinerTable::distance(VertexMask subset) const {
    if (subset >= dist_.size() || dist_[subset] < 0)
        throw std::invalid_argument("subset not covered by the table");
    return dist_[subset];
}

std::int64_t steiner_wiener(const Graph& g, int k) {
    const int n = g.order();
    if (n > 16) throw cap_error("steiner_wiener supports n <= 16");
    if (k < 2 || k > n) throw std::invalid_argument("k out of range 2..n");
    if (!is_connected(g)) throw std::invalid_argument("graph is disconnected");
    if (k == n) return n - 1;
    SteinerTable table = build_steiner_table_any_k(g, k);
    std::int64_t sum = 0;
    for (VertexMask s = vertex_bit(k) - 1; s < vertex_bit(n);) {
        sum += table.distance(s);
        VertexMask c = s & -s, r = s + c;
        s = r | (((s ^ r) >> 2) / c);
    }
    return sum;
}

}  // namespace steiner
