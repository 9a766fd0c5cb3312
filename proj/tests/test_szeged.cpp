#include "doctest.h"

#include "steiner/closed_form.hpp"
#include "steiner/szeged.hpp"

using namespace steiner;

TEST_CASE("quarter rationals") {
    QuarterRational a = QuarterRational::from_quarters(25);
    CHECK(a.str() == "25/4");
    CHECK_FALSE(a.is_integer());
    CHECK(QuarterRational::from_quarters(250).str() == "125/2");
    CHECK(QuarterRational::from_int(16).str() == "16");
    CHECK(QuarterRational::from_int(16).is_integer());
    CHECK(QuarterRational::from_quarters(0).str() == "0");

    CHECK(QuarterRational::from_quarters(9) + QuarterRational::from_int(4) ==
          QuarterRational::from_quarters(25));
    CHECK(3 * QuarterRational::from_quarters(9) == QuarterRational::from_quarters(27));
    CHECK(QuarterRational::from_quarters(9) < QuarterRational::from_int(3));
    CHECK(QuarterRational::half_product(3, 3) == QuarterRational::from_quarters(9));
}

TEST_CASE("edge classification examples") {
    Graph k4 = generate({Family::complete, {4}});
    SteinerTable tk = SteinerTable::build(k4, 3);
    for (const Edge& e : k4.edges()) {
        EdgeClassification c = classify_edge(tk, k4, e, 3);
        CHECK(c.n_u == 0);
        CHECK(c.n_v == 0);
        CHECK(c.n_0 == 1);
    }

    Graph p4 = generate({Family::path, {4}});
    SteinerTable tp = SteinerTable::build(p4, 3);
    EdgeClassification mid = classify_edge(tp, p4, {1, 2}, 3);
    CHECK(mid.n_u == 0);
    CHECK(mid.n_v == 0);
    CHECK(mid.n_0 == 1);
    EdgeClassification end = classify_edge(tp, p4, {0, 1}, 3);
    CHECK(end.n_u == 0);
    CHECK(end.n_v == 1);
    CHECK(end.n_0 == 0);

    CHECK_THROWS_AS(classify_edge(tp, p4, {0, 2}, 3), std::invalid_argument);
    CHECK_THROWS_AS(classify_edge(tp, p4, {0, 1}, 4), std::invalid_argument);
}

TEST_CASE("classification oracle route matches the table route") {
    Graph paw = generate({Family::paw, {}});
    SteinerTable t = build_steiner_table_any_k(paw, 3);
    for (const Edge& e : paw.edges()) {
        EdgeClassification a = classify_edge(t, paw, e, 3);
        EdgeClassification b = classify_edge_oracle(paw, e, 3);
        CHECK(a.n_u == b.n_u);
        CHECK(a.n_v == b.n_v);
        CHECK(a.n_0 == b.n_0);
    }
}

TEST_CASE("partition identity over the corpus") {
    for (int n = 3; n <= 6; ++n)
        for (const Graph& g : connected_graph_corpus(n))
            for (int k = 2; k <= n - 1; ++k) {
                SteinerTable t = build_steiner_table_any_k(g, k);
                for (const Edge& e : g.edges()) {
                    EdgeClassification c = classify_edge(t, g, e, k);
                    CHECK(c.eligible() ==
                          static_cast<std::int64_t>(binomial(n - 2, k - 1)));
                    CHECK(c.n_u >= 0);
                    CHECK(c.n_v >= 0);
                    CHECK(c.n_0 >= 0);
                }
            }
}

TEST_CASE("steiner szeged index examples") {
    CHECK(sz_k(generate({Family::complete, {5}}), 3) == 10);
    CHECK(sz_k(generate({Family::path, {4}}), 3) == 5);
    CHECK(sz_k(generate({Family::cycle, {5}}), 3) == 20);
    CHECK_THROWS_AS(sz_k(generate({Family::path, {4}}), 4), std::invalid_argument);
    CHECK_THROWS_AS(sz_k(Graph(4, {{0, 1}, {2, 3}}), 2), std::invalid_argument);
}

TEST_CASE("steiner revised szeged index examples") {
    CHECK(rsz_k(generate({Family::path, {4}}), 3) == QuarterRational::from_quarters(25));
    CHECK(rsz_k(generate({Family::complete, {5}}), 2) == QuarterRational::from_quarters(250));
    for (int leaves = 2; leaves <= 6; ++leaves) {
        Graph star = generate({Family::star, {leaves}});
        for (int k = 2; k <= leaves; ++k)
            CHECK(rsz_k(star, k) == QuarterRational::from_int(sz_k(star, k)));
    }
}

TEST_CASE("classical szeged examples") {
    CHECK(classical_szeged(generate({Family::path, {4}})) == 10);
    CHECK(classical_szeged(generate({Family::cycle, {4}})) == 16);
    CHECK(classical_szeged(generate({Family::complete, {3}})) == 3);

    CHECK(classical_revised_szeged(generate({Family::complete, {3}})) ==
          QuarterRational::from_quarters(27));
    CHECK(classical_revised_szeged(generate({Family::cycle, {4}})) ==
          QuarterRational::from_int(16));
    CHECK(classical_revised_szeged(Graph(2, {{0, 1}})) == QuarterRational::from_int(1));
}

TEST_CASE("k = 2 reduces to the classical indices") {
    for (int n = 3; n <= 6; ++n)
        for (const Graph& g : connected_graph_corpus(n)) {
            CHECK(sz_k(g, 2) == classical_szeged(g));
            CHECK(rsz_k(g, 2) == classical_revised_szeged(g));
        }
}

TEST_CASE("index inequalities") {
    for (int n = 3; n <= 6; ++n)
        for (const Graph& g : connected_graph_corpus(n))
            for (int k = 2; k <= n - 1; ++k) {
                std::int64_t sz = sz_k(g, k);
                CHECK(sz >= g.size());  // every factor is at least 1
                CHECK(QuarterRational::from_int(sz) <= rsz_k(g, k));
                SteinerTable t = build_steiner_table_any_k(g, k);
                for (const Edge& e : g.edges()) {
                    EdgeClassification c = classify_edge(t, g, e, k);
                    CHECK(QuarterRational::from_int(c.sz_term()) <= c.rsz_term());
                }
            }
}

TEST_CASE("indices are isomorphism invariant") {
    Rng rng(99);
    for (const Graph& g : connected_graph_corpus(5)) {
        int n = g.order();
        if (n < 3) continue;
        std::vector<int> perm(n);
        for (int v = 0; v < n; ++v) perm[v] = v;
        for (int v = n - 1; v > 0; --v) std::swap(perm[v], perm[rng.below(v + 1)]);
        std::vector<Edge> mapped;
        for (const Edge& e : g.edges()) mapped.push_back(make_edge(perm[e.u], perm[e.v]));
        Graph h(n, mapped);
        for (int k = 2; k <= n - 1; ++k) {
            CHECK(sz_k(g, k) == sz_k(h, k));
            CHECK(rsz_k(g, k) == rsz_k(h, k));
        }
    }
}
