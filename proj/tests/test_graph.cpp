#include "doctest.h"

#include <algorithm>
#include <bit>
#include <set>

#include "steiner/graph.hpp"

using namespace steiner;

TEST_CASE("edge list parsing") {
    Graph p4 = parse_edgelist("4\n0 1\n1 2\n2 3");
    CHECK(p4.order() == 4);
    CHECK(p4.edges() == std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});

    Graph k3 = parse_edgelist("3\n0 1\n1 2\n0 2");
    CHECK(k3.size() == 3);

    Graph commented = parse_edgelist("# a path\n3\n\n0 1\n# middle\n1 2\n");
    CHECK(commented.size() == 2);
}

TEST_CASE("edge list errors name the line") {
    CHECK_THROWS_WITH_AS(parse_edgelist("2\n0 1\n0 1"), "line 3: duplicate edge (0,1)",
                         parse_error);
    CHECK_THROWS_WITH_AS(parse_edgelist("2\n1 1"), "line 2: self-loop at vertex 1", parse_error);
    CHECK_THROWS_AS(parse_edgelist("2\n0 5"), parse_error);
    CHECK_THROWS_AS(parse_edgelist("3\n0 1 junk"), parse_error);
    CHECK_THROWS_AS(parse_edgelist("3\nzero one"), parse_error);
    CHECK_THROWS_AS(parse_edgelist("# only comments\n"), parse_error);
    try {
        parse_edgelist("4\n0 1\n4 1");
    } catch (const parse_error& e) {
        CHECK(e.line() == 3);
    }
}

TEST_CASE("graph6 round trip and hand-packed bits") {
    Graph star = parse_graph6("D?{");
    CHECK(star.order() == 5);
    CHECK(star.size() == 4);
    CHECK(emit_graph6(star) == "D?{");

    // K_3 by hand: n byte 'B' = 3+63, upper triangle bits 111 padded to
    // 111000 = 56, 56+63 = 119 = 'w'.
    Graph k3 = parse_graph6("Bw");
    CHECK(k3.order() == 3);
    CHECK(k3.size() == 3);
    CHECK(emit_graph6(k3) == "Bw");

    CHECK(parse_graph6("D?{\n").order() == 5);  // trailing newline tolerated
}

TEST_CASE("graph6 errors") {
    CHECK_THROWS_AS(parse_graph6(""), parse_error);
    CHECK_THROWS_AS(parse_graph6("D?"), parse_error);       // truncated
    CHECK_THROWS_AS(parse_graph6("D?{{"), parse_error);     // trailing data
    CHECK_THROWS_AS(parse_graph6("~??"), parse_error);      // long form
    CHECK_THROWS_AS(parse_graph6("D\x1f{"), parse_error);   // byte below 63
    CHECK_THROWS_AS(parse_graph6("B\x7f"), parse_error);    // byte above 126
}

TEST_CASE("graph6 round trip across the corpus") {
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : connected_graph_corpus(n)) {
            std::string enc = emit_graph6(g);
            Graph back = parse_graph6(enc);
            CHECK(back.order() == g.order());
            CHECK(back.edges() == g.edges());
        }
}

TEST_CASE("graph6 round trip at larger orders") {
    Rng rng(5150);
    for (int n : {13, 20, 33, 47, 62}) {
        Graph g = random_connected_graph(n, rng);
        Graph back = parse_graph6(emit_graph6(g));
        CHECK(back.order() == n);
        CHECK(back.edges() == g.edges());
    }
    CHECK_THROWS_AS(emit_graph6(Graph(63, {})), std::invalid_argument);
}

TEST_CASE("family generators") {
    Graph p4 = generate({Family::path, {4}});
    CHECK(p4.edges() == std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});

    Graph k22 = generate({Family::complete_multipartite, {2, 2}});
    CHECK(k22.order() == 4);
    CHECK(k22.size() == 4);
    CHECK_FALSE(k22.has_edge(0, 1));  // no edge inside a part
    CHECK_FALSE(k22.has_edge(2, 3));

    Graph paw = generate({Family::paw, {}});
    CHECK(paw.order() == 4);
    CHECK(paw.size() == 4);
    int deg1 = 0;
    for (int v = 0; v < 4; ++v) deg1 += paw.degree(v) == 1;
    CHECK(deg1 == 1);

    Graph star = generate({Family::star, {4}});
    CHECK(star.order() == 5);
    CHECK(star.degree(0) == 4);

    CHECK_THROWS_AS(generate({Family::complete_multipartite, {3}}), std::invalid_argument);
    CHECK_THROWS_AS(generate({Family::cycle, {2}}), std::invalid_argument);
    CHECK_THROWS_AS(generate({Family::paw, {4}}), std::invalid_argument);
}

TEST_CASE("family size formulas") {
    for (int n = 2; n <= 9; ++n) CHECK(generate({Family::path, {n}}).size() == n - 1);
    for (int n = 2; n <= 9; ++n)
        CHECK(generate({Family::complete, {n}}).size() == n * (n - 1) / 2);
    std::vector<std::vector<int>> part_lists = {{2, 2}, {2, 3}, {3, 3}, {2, 2, 2}, {1, 2, 3}};
    for (const auto& parts : part_lists) {
        int expect = 0;
        for (std::size_t i = 0; i < parts.size(); ++i)
            for (std::size_t j = i + 1; j < parts.size(); ++j) expect += parts[i] * parts[j];
        CHECK(generate({Family::complete_multipartite, parts}).size() == expect);
    }
}

TEST_CASE("tree enumeration counts match the unlabeled tree sequence") {
    const int expected[] = {0, 0, 1, 1, 2, 3, 6, 11, 23, 47};
    for (int n = 2; n <= 9; ++n) {
        std::vector<Graph> trees = enumerate_trees(n);
        CHECK(static_cast<int>(trees.size()) == expected[n]);
        for (const Graph& t : trees) {
            CHECK(t.size() == n - 1);
            CHECK(is_connected(t));
        }
    }
    CHECK_THROWS_AS(enumerate_trees(1), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_trees(11), std::invalid_argument);
}

TEST_CASE("trees of order 4 are the path and the star") {
    std::vector<Graph> trees = enumerate_trees(4);
    REQUIRE(trees.size() == 2);
    std::set<std::multiset<int>> degs;
    for (const Graph& t : trees) {
        std::multiset<int> d;
        for (int v = 0; v < 4; ++v) d.insert(t.degree(v));
        degs.insert(d);
    }
    CHECK(degs.contains(std::multiset<int>{1, 1, 2, 2}));
    CHECK(degs.contains(std::multiset<int>{1, 1, 1, 3}));
}

TEST_CASE("pendant edges") {
    CHECK(pendant_edge_count(generate({Family::path, {4}})) == 2);
    CHECK(pendant_edge_count(generate({Family::star, {4}})) == 4);
    CHECK(pendant_edge_count(generate({Family::cycle, {5}})) == 0);
    CHECK(pendant_edge_count(Graph(2, {{0, 1}})) == 1);
}

TEST_CASE("connectivity predicates") {
    CHECK(is_connected(generate({Family::path, {4}})));
    CHECK_FALSE(is_connected(Graph(4, {{0, 1}, {2, 3}})));
    CHECK(is_connected(Graph(1, {})));
}

TEST_CASE("vertex connectivity on named graphs") {
    CHECK(vertex_connectivity(generate({Family::cycle, {5}})) == 2);
    CHECK(vertex_connectivity(generate({Family::complete, {5}})) == 4);
    CHECK(vertex_connectivity(generate({Family::path, {4}})) == 1);
    CHECK(vertex_connectivity(Graph(1, {})) == 0);
    CHECK_THROWS_AS(vertex_connectivity(Graph(4, {{0, 1}, {2, 3}})), std::invalid_argument);
}

TEST_CASE("vertex connectivity agrees with the definition") {
    for (int n = 2; n <= 6; ++n)
        for (const Graph& g : connected_graph_corpus(n)) {
            int kappa = vertex_connectivity(g);
            if (g.size() == n * (n - 1) / 2) {
                CHECK(kappa == n - 1);
                continue;
            }
            bool smaller_cut = false;  // no set below kappa disconnects
            bool exact_cut = false;    // some kappa-set does
            for (VertexMask cut = 0; cut < vertex_bit(n); ++cut) {
                int size = std::popcount(cut);
                if (size >= n - 1 || size > kappa) continue;
                bool disconnects = !connected_induced(g, g.full_mask() & ~cut);
                if (size < kappa && disconnects) smaller_cut = true;
                if (size == kappa && disconnects) exact_cut = true;
            }
            CHECK_FALSE(smaller_cut);
            CHECK(exact_cut);
        }
}

TEST_CASE("connected corpus counts") {
    const int expected[] = {0, 1, 1, 2, 6, 21, 112};
    for (int n = 1; n <= 6; ++n)
        CHECK(static_cast<int>(connected_graph_corpus(n).size()) == expected[n]);
}

TEST_CASE("corpus graphs are connected and distinct") {
    std::set<std::string> seen;
    for (const Graph& g : connected_graph_corpus(6)) {
        CHECK(is_connected(g));
        CHECK(seen.insert(emit_graph6(g)).second);
    }
}

TEST_CASE("random connected graphs are connected and reproducible") {
    Rng a(42), b(42);
    for (int i = 0; i < 20; ++i) {
        Graph ga = random_connected_graph(8 + i % 3, a);
        Graph gb = random_connected_graph(8 + i % 3, b);
        CHECK(is_connected(ga));
        CHECK(ga.edges() == gb.edges());
    }
}

TEST_CASE("graph construction validates input") {
    CHECK_THROWS_AS(Graph(0, {}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(65, {}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(2, {{0, 5}}), std::invalid_argument);
    CHECK_THROWS_AS(make_edge(2, 2), std::invalid_argument);
    CHECK(make_edge(3, 1) == Edge{1, 3});
}
