#include "doctest.h"

#include <algorithm>

#include "steiner/symmetry.hpp"

using namespace steiner;

TEST_CASE("automorphism group sizes") {
    CHECK(automorphisms(generate({Family::cycle, {5}})).size() == 10);
    CHECK(automorphisms(generate({Family::path, {4}})).size() == 2);
    CHECK(automorphisms(generate({Family::complete, {4}})).size() == 24);
    CHECK(automorphisms(generate({Family::paw, {}})).size() == 2);
    CHECK(automorphisms(generate({Family::star, {5}})).size() == 120);
}

TEST_CASE("permutation validation") {
    Graph p4 = generate({Family::path, {4}});
    CHECK_NOTHROW(Permutation({3, 2, 1, 0}, p4));
    CHECK_THROWS_AS(Permutation({1, 0, 2, 3}, p4), std::invalid_argument);  // not edge-preserving
    CHECK_THROWS_AS(Permutation({0, 0, 2, 3}, p4), std::invalid_argument);  // not a bijection
    CHECK_THROWS_AS(Permutation({0, 1, 2}, p4), std::invalid_argument);     // wrong size
}

TEST_CASE("group axioms hold on the returned list") {
    for (const Graph& g : {generate({Family::paw, {}}), generate({Family::cycle, {6}}),
                           generate({Family::complete_multipartite, {2, 3}})}) {
        std::vector<Permutation> group = automorphisms(g);
        const int n = g.order();
        std::vector<int> identity(n);
        for (int v = 0; v < n; ++v) identity[v] = v;
        auto contains = [&](const std::vector<int>& img) {
            return std::any_of(group.begin(), group.end(),
                               [&](const Permutation& p) { return p.image() == img; });
        };
        CHECK(contains(identity));
        for (const Permutation& a : group) {
            std::vector<int> inverse(n);
            for (int v = 0; v < n; ++v) inverse[a(v)] = v;
            CHECK(contains(inverse));
            for (const Permutation& b : group) {
                std::vector<int> composed(n);
                for (int v = 0; v < n; ++v) composed[v] = a(b(v));
                CHECK(contains(composed));
            }
        }
    }
}

TEST_CASE("automorphism order cap") {
    std::vector<Edge> edges;
    for (int i = 0; i < 12; ++i) edges.push_back({i, i + 1});
    CHECK_THROWS_AS(automorphisms(Graph(13, edges)), cap_error);
}

TEST_CASE("edge orbits of named graphs") {
    OrbitPartition star = edge_orbits(generate({Family::star, {4}}));
    REQUIRE(star.orbits.size() == 1);
    CHECK(star.orbits[0].size() == 4);

    OrbitPartition paw = edge_orbits(generate({Family::paw, {}}));
    REQUIRE(paw.orbits.size() == 3);
    CHECK(paw.orbits[0] == std::vector<Edge>{{0, 1}});
    CHECK(paw.orbits[1] == std::vector<Edge>{{0, 2}, {1, 2}});
    CHECK(paw.orbits[2] == std::vector<Edge>{{2, 3}});
    CHECK(paw.representatives == std::vector<Edge>{{0, 1}, {0, 2}, {2, 3}});

    OrbitPartition p5 = edge_orbits(generate({Family::path, {5}}));
    CHECK(p5.orbits.size() == 2);
}

TEST_CASE("orbits partition the edge set") {
    for (int n = 3; n <= 6; ++n)
        for (const Graph& g : connected_graph_corpus(n)) {
            OrbitPartition part = edge_orbits(g);
            std::vector<Edge> all;
            for (std::size_t i = 0; i < part.orbits.size(); ++i) {
                CHECK(part.representatives[i] == part.orbits[i].front());
                all.insert(all.end(), part.orbits[i].begin(), part.orbits[i].end());
            }
            std::sort(all.begin(), all.end());
            CHECK(all == g.edges());
        }
}

TEST_CASE("classification pairs are constant on orbits") {
    // exhaustive small graphs, k in {2,3}, plus named families
    std::vector<Graph> graphs;
    for (int n = 3; n <= 5; ++n)
        for (const Graph& g : connected_graph_corpus(n)) graphs.push_back(g);
    graphs.push_back(generate({Family::cycle, {6}}));
    graphs.push_back(generate({Family::complete_multipartite, {2, 3}}));
    graphs.push_back(generate({Family::star, {5}}));
    for (const Graph& g : graphs) {
        const int n = g.order();
        OrbitPartition part = edge_orbits(g);
        for (int k = 2; k <= std::min(3, n - 1); ++k) {
            SteinerTable t = build_steiner_table_any_k(g, k);
            for (std::size_t i = 0; i < part.orbits.size(); ++i) {
                EdgeClassification rep = classify_edge(t, g, part.representatives[i], k);
                auto rep_pair = std::minmax(rep.n_u, rep.n_v);
                for (const Edge& e : part.orbits[i]) {
                    EdgeClassification c = classify_edge(t, g, e, k);
                    CHECK(std::minmax(c.n_u, c.n_v) == rep_pair);
                    CHECK(c.n_0 == rep.n_0);  // forced by the partition identity
                }
            }
        }
    }
}

TEST_CASE("orbit-accelerated index values") {
    CHECK(sz_k_via_orbits(generate({Family::cycle, {5}}), 3) == 20);
    CHECK(sz_k_via_orbits(generate({Family::complete, {5}}), 3) == 10);
    CHECK(sz_k_via_orbits(generate({Family::paw, {}}), 3) == 7);
    CHECK(rsz_k_via_orbits(generate({Family::cycle, {5}}), 3) ==
          QuarterRational::from_quarters(125));
}

TEST_CASE("orbit method equals direct method") {
    for (int n = 3; n <= 6; ++n)
        for (const Graph& g : connected_graph_corpus(n))
            for (int k = 2; k <= n - 1; ++k) {
                CHECK(sz_k_via_orbits(g, k) == sz_k(g, k));
                CHECK(rsz_k_via_orbits(g, k) == rsz_k(g, k));
            }
}
