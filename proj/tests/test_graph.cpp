#include <doctest.h>

#include <random>
#include <set>
#include <vector>

#include "oracles.hpp"
#include "zsflow/generators.hpp"
#include "zsflow/graph.hpp"
#include "zsflow/io.hpp"

using namespace zsflow;

TEST_CASE("build assigns dense ids in input order") {
    std::vector<std::pair<int, int>> tri{{0, 1}, {1, 2}, {2, 0}};
    MultiGraph c3 = build(3, tri);
    CHECK(c3.vertex_count() == 3);
    CHECK(c3.edge_count() == 3);
    CHECK(c3.edge(2) == Edge{2, 0});
    CHECK(regular_degree(c3) == 2);

    std::vector<std::pair<int, int>> pair{{0, 1}, {0, 1}};
    MultiGraph par = build(2, pair);
    CHECK(degree_profile(par) == DegreeProfile{2, 2});
}

TEST_CASE("build rejects loops and out-of-range endpoints") {
    std::vector<std::pair<int, int>> loop{{0, 0}};
    try {
        build(2, loop);
        FAIL("loop accepted");
    } catch (const InvalidInput& e) {
        CHECK(e.witness() == 0);
    }
    std::vector<std::pair<int, int>> far{{0, 1}, {1, 5}};
    try {
        build(3, far);
        FAIL("range error missed");
    } catch (const InvalidInput& e) {
        CHECK(e.witness() == 1);
    }
}

TEST_CASE("regular_degree") {
    CHECK(regular_degree(petersen()) == 3);
    CHECK(regular_degree(complete(5)) == 4);
    CHECK_FALSE(regular_degree(path(3)).has_value());
}

TEST_CASE("components are ordered by smallest vertex") {
    MultiGraph two(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
    auto comps = components(two);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == std::vector<VertexId>{0, 1, 2});
    CHECK(comps[1] == std::vector<VertexId>{3, 4, 5});

    CHECK(components(complete(4)).size() == 1);
    CHECK(components(complete(4))[0].size() == 4);

    auto singles = components(MultiGraph(3, {}));
    CHECK(singles == std::vector<std::vector<VertexId>>{{0}, {1}, {2}});
}

TEST_CASE("components partition the vertex set") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        MultiGraph g = oracle::random_multigraph(12, trial % 10, rng);
        std::vector<int> hit(12, 0);
        for (const auto& c : components(g))
            for (VertexId v : c) ++hit[v];
        for (int h : hit) CHECK(h == 1);
    }
}

TEST_CASE("double_edges doubles degrees and pairs copies") {
    DoubledGraph d = double_edges(cycle(3));
    CHECK(d.graph.edge_count() == 6);
    CHECK(regular_degree(d.graph) == 4);

    DoubledGraph single = double_edges(path(2));
    CHECK(degree_profile(single.graph) == DegreeProfile{2, 2});

    DoubledGraph k4 = double_edges(complete(4));
    CHECK(k4.graph.edge_count() == 12);
    CHECK(regular_degree(k4.graph) == 6);

    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        MultiGraph g = oracle::random_multigraph(7, 9, rng);
        DoubledGraph dg = double_edges(g);
        auto base = degree_profile(g);
        auto twice = degree_profile(dg.graph);
        for (std::size_t v = 0; v < base.size(); ++v) CHECK(twice[v] == 2 * base[v]);
        for (EdgeId e = 0; e < dg.graph.edge_count(); ++e) {
            EdgeId p = dg.partner[e];
            CHECK(p != e);
            CHECK(dg.partner[p] == e);
            CHECK(dg.graph.edge(p) == dg.graph.edge(e));
        }
    }
}

TEST_CASE("generators") {
    MultiGraph g = cubic_no_pm();
    CHECK(g.vertex_count() == 16);
    CHECK(g.edge_count() == 24);
    CHECK(regular_degree(g) == 3);

    std::vector<int> offs{1, 2, 3};
    CHECK(regular_degree(circulant(8, offs)) == 6);
    std::vector<int> seven{1, 2, 3, 5};
    CHECK(regular_degree(circulant(10, seven)) == 7);

    std::vector<int> clash{1, 7};
    CHECK_THROWS_AS(circulant(8, clash), InvalidInput);

    CHECK(regular_degree(petersen()) == 3);
    CHECK(petersen().edge_count() == 15);
    CHECK(regular_degree(complete_bipartite(3, 3)) == 3);
}

TEST_CASE("random_regular is simple, regular and reproducible") {
    MultiGraph a = random_regular(10, 3, 1);
    CHECK(regular_degree(a) == 3);
    CHECK(a == random_regular(10, 3, 1));
    CHECK_THROWS_AS(random_regular(9, 3, 1), InvalidInput);
    CHECK_THROWS_AS(random_regular(4, 4, 1), InvalidInput);

    for (int r : {3, 4, 7, 9, 11}) {
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            int n = r % 2 ? 2 * (r + seed) : r + 1 + static_cast<int>(seed);
            MultiGraph g = random_regular(n, r, seed);
            CHECK(regular_degree(g) == r);
            std::set<std::pair<int, int>> seen;
            for (const Edge& e : g.edges()) {
                CHECK(e.u != e.v);
                CHECK(seen.insert({std::min(e.u, e.v), std::max(e.u, e.v)}).second);
            }
        }
    }
}

TEST_CASE("graph6 decoding") {
    // 'C' = 67 -> n = 4; '~' = 126 -> bits 111111, all six pairs present.
    MultiGraph k4 = parse_graph6("C~\n");
    CHECK(k4.vertex_count() == 4);
    CHECK(k4.edge_count() == 6);
    CHECK(regular_degree(k4) == 3);

    // 'D' -> n = 5; C5 as 0-1-2-3-4-0 sets bits (0,1),(1,2),(2,3),(0,4),(3,4):
    // order 01 02 12 03 13 23 04 14 24 34 -> 1010011001 -> 101001 100100
    // -> 41, 36 -> 'h', 'c'.
    MultiGraph c5 = parse_graph6("Dhc");
    CHECK(c5.edge_count() == 5);
    CHECK(regular_degree(c5) == 2);

    CHECK(parse_graph6(">>graph6<<C~").edge_count() == 6);
    CHECK_THROWS_AS(parse_graph6("C"), ParseError);
    CHECK_THROWS_AS(parse_graph6("C~~"), ParseError);
    CHECK_THROWS_AS(parse_graph6(""), ParseError);
}

TEST_CASE("graph6 round trip on random simple graphs") {
    std::mt19937_64 rng(3);
    for (int n : {1, 2, 5, 13, 64, 70}) {
        std::vector<Edge> edges;
        std::bernoulli_distribution coin(0.3);
        for (int v = 1; v < n; ++v)
            for (int u = 0; u < v; ++u)
                if (coin(rng)) edges.push_back({u, v});
        MultiGraph g(n, edges);
        MultiGraph back = parse_graph6(write_graph6(g));
        CHECK(back == g);
    }
}

TEST_CASE("edge list parsing") {
    MultiGraph c3 = parse_edge_list("3 3\n0 1\n1 2\n2 0");
    CHECK(c3 == cycle(3));

    try {
        parse_edge_list("2 1\n0 0\n");
        FAIL("loop accepted");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
    try {
        parse_edge_list("# header next\n3 2\n0 1\n1 7\n");
        FAIL("range error missed");
    } catch (const ParseError& e) {
        CHECK(e.line() == 4);
    }
    CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3 1\n0 1\n1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("x y\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list(""), ParseError);
}

TEST_CASE("edge list round trip is stable") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 10; ++trial) {
        MultiGraph g = oracle::random_multigraph(6, 2 * trial, rng);
        std::string text = write_edge_list(g);
        MultiGraph back = parse_edge_list(text);
        CHECK(back == g);
        CHECK(write_edge_list(back) == text);
    }
    // Normalization: comments and spacing disappear after one pass.
    std::string messy = "# c\n 3   2 \n\n0 1\n  1\t2\n";
    std::string once = write_edge_list(parse_edge_list(messy));
    CHECK(once == "3 2\n0 1\n1 2\n");
    CHECK(write_edge_list(parse_edge_list(once)) == once);
}

TEST_CASE("subgraph extraction maps back to host ids") {
    MultiGraph k4 = complete(4);
    std::vector<EdgeId> pick{1, 5};  // (0,2) and (2,3)
    Subgraph sub = edge_subgraph(k4, pick);
    CHECK(sub.graph.vertex_count() == 3);
    CHECK(sub.host_vertex == std::vector<VertexId>{0, 2, 3});
    CHECK(sub.host_edge == pick);

    std::vector<VertexId> verts{3, 1};
    Subgraph ind = induced_subgraph(k4, verts);
    CHECK(ind.graph.edge_count() == 1);
    CHECK(ind.host_edge == std::vector<EdgeId>{4});
}
