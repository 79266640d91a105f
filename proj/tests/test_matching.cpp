#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "zsflow/generators.hpp"
#include "zsflow/matching.hpp"

using namespace zsflow;

TEST_CASE("max_matching on small cycles") {
    CHECK(max_matching(cycle(4)).size() == 2);
    CHECK(max_matching(cycle(5)).size() == 2);
    CHECK(is_matching(cycle(5), max_matching(cycle(5))));
}

TEST_CASE("cubic_no_pm has a maximum matching of size 7") {
    MultiGraph g = cubic_no_pm();
    CHECK(oracle::max_matching_size(g) == 7);
    Matching m = max_matching(g);
    CHECK(m.size() == 7);
    CHECK(is_matching(g, m));
}

TEST_CASE("has_perfect_matching") {
    CHECK(has_perfect_matching(petersen()));
    CHECK_FALSE(has_perfect_matching(cubic_no_pm()));
    CHECK(has_perfect_matching(complete(2)));
    CHECK_FALSE(has_perfect_matching(complete(3)));
    CHECK_FALSE(has_perfect_matching(MultiGraph(1, {})));
}

TEST_CASE("max_matching agrees with exhaustive search") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> nd(2, 12);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = nd(rng);
        std::uniform_int_distribution<int> md(0, std::min(22, n * (n - 1) / 2 + 3));
        MultiGraph g = oracle::random_multigraph(n, md(rng), rng);
        Matching m = max_matching(g);
        REQUIRE(is_matching(g, m));
        CHECK(m.size() == oracle::max_matching_size(g));
        CHECK(has_perfect_matching(g) == (2 * oracle::max_matching_size(g) == n));
    }
}

namespace {

void check_decomposition(const MultiGraph& g, const std::vector<Matching>& parts, int k) {
    REQUIRE(static_cast<int>(parts.size()) == k);
    std::vector<int> owner(static_cast<std::size_t>(g.edge_count()), 0);
    for (const Matching& m : parts) {
        CHECK(is_matching(g, m));
        CHECK(2 * m.size() == g.vertex_count());
        for (EdgeId e : m.edges) ++owner[e];
    }
    for (int o : owner) CHECK(o == 1);
}

}  // namespace

TEST_CASE("regular bipartite decomposition") {
    MultiGraph c6 = cycle(6);
    std::vector<int> c6_side{0, 1, 0, 1, 0, 1};
    check_decomposition(c6, regular_bipartite_pm_decomposition(c6, c6_side, 2), 2);

    MultiGraph k33 = complete_bipartite(3, 3);
    std::vector<int> k33_side{0, 0, 0, 1, 1, 1};
    check_decomposition(k33, regular_bipartite_pm_decomposition(k33, k33_side, 3), 3);

    MultiGraph fat(2, {{0, 1}, {0, 1}, {0, 1}, {0, 1}});
    std::vector<int> fat_side{0, 1};
    auto parts = regular_bipartite_pm_decomposition(fat, fat_side, 4);
    check_decomposition(fat, parts, 4);
    for (const auto& m : parts) CHECK(m.size() == 1);
}

TEST_CASE("regular bipartite decomposition rejects bad input with a witness") {
    MultiGraph c5 = cycle(5);
    std::vector<int> side{0, 1, 0, 1, 0};
    try {
        regular_bipartite_pm_decomposition(c5, side, 2);
        FAIL("odd cycle accepted");
    } catch (const InvalidInput& e) {
        // Edge (4,0) joins side 0 to side 0; either endpoint is a witness.
        CHECK((e.witness() == 4 || e.witness() == 0));
    }
    MultiGraph p = path(4);
    std::vector<int> pside{0, 1, 0, 1};
    try {
        regular_bipartite_pm_decomposition(p, pside, 2);
        FAIL("irregular accepted");
    } catch (const InvalidInput& e) {
        CHECK(e.witness() == 0);
    }
}

TEST_CASE("regular bipartite decomposition on random regular bipartite multigraphs") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 30; ++trial) {
        const int half = 2 + trial % 7;
        const int k = 1 + trial % 5;
        // Union of k random perfect matchings between the sides.
        std::vector<Edge> edges;
        std::vector<int> perm(static_cast<std::size_t>(half));
        for (int i = 0; i < k; ++i) {
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            for (int u = 0; u < half; ++u) edges.push_back({u, half + perm[u]});
        }
        MultiGraph g(2 * half, edges);
        std::vector<int> side(static_cast<std::size_t>(2 * half), 0);
        std::fill(side.begin() + half, side.end(), 1);
        check_decomposition(g, regular_bipartite_pm_decomposition(g, side, k), k);
    }
}

TEST_CASE("degree_range_factor examples") {
    auto pm = degree_range_factor(complete(4), 1, 1);
    REQUIRE(pm.has_value());
    CHECK(pm->edges.size() == 2);
    CHECK(is_matching(complete(4), Matching{pm->edges}));

    auto whole = degree_range_factor(cycle(5), 2, 2);
    REQUIRE(whole.has_value());
    CHECK(whole->edges == std::vector<EdgeId>{0, 1, 2, 3, 4});

    CHECK_FALSE(degree_range_factor(cubic_no_pm(), 1, 1).has_value());
    CHECK_THROWS_AS(degree_range_factor(complete(4), 1, 3), InvalidInput);
}

TEST_CASE("degree_range_factor agrees with subset enumeration") {
    std::mt19937_64 rng(31337);
    std::uniform_int_distribution<int> nd(2, 7), md(0, 10), lod(0, 3), wd(0, 1);
    int present = 0;
    for (int trial = 0; trial < 400; ++trial) {
        MultiGraph g = oracle::random_multigraph(nd(rng), md(rng), rng);
        const int lo = lod(rng);
        const int hi = lo + wd(rng);
        auto f = degree_range_factor(g, lo, hi);
        std::vector<int> lov(static_cast<std::size_t>(g.vertex_count()), lo);
        std::vector<int> hiv(static_cast<std::size_t>(g.vertex_count()), hi);
        CHECK(f.has_value() == oracle::factor_exists(g, lov, hiv));
        if (f) {
            ++present;
            for (int d : degree_profile(g, *f)) {
                CHECK(d >= lo);
                CHECK(d <= hi);
            }
        }
    }
    CHECK(present > 20);
}

TEST_CASE("bounded_degree_factor with per-vertex ranges and an edge mask") {
    std::mt19937_64 rng(4);
    std::uniform_int_distribution<int> nd(2, 6), md(0, 10), lod(0, 2), wd(0, 1), coin(0, 3);
    for (int trial = 0; trial < 300; ++trial) {
        MultiGraph g = oracle::random_multigraph(nd(rng), md(rng), rng);
        std::vector<int> lo, hi;
        for (int v = 0; v < g.vertex_count(); ++v) {
            lo.push_back(lod(rng));
            hi.push_back(lo.back() + wd(rng));
        }
        std::vector<char> allowed;
        std::vector<Edge> kept;
        for (int e = 0; e < g.edge_count(); ++e) {
            allowed.push_back(coin(rng) != 0);
            if (allowed.back()) kept.push_back(g.edge(e));
        }
        auto f = bounded_degree_factor(g, lo, hi, allowed);
        CHECK(f.has_value() == oracle::factor_exists(MultiGraph(g.vertex_count(), kept), lo, hi));
        if (f) {
            auto deg = degree_profile(g, *f);
            for (int v = 0; v < g.vertex_count(); ++v) {
                CHECK(deg[v] >= lo[v]);
                CHECK(deg[v] <= hi[v]);
            }
            for (EdgeId e : f->edges) CHECK(allowed[e]);
        }
    }
}
