#include <doctest.h>

#include <random>

#include "brute.hpp"
#include "nearopt/detect.hpp"
#include "nearopt/harness.hpp"
#include "nearopt/oracles.hpp"
#include "nearopt/witnesses.hpp"

using namespace nearopt;

namespace {

Graph random_graph(int n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) es.emplace_back(u, v);
    return build_graph(n, es);
}

bool is_clique(const Graph& g, const std::vector<int>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (!g.adjacent(vs[i], vs[j])) return false;
    return true;
}

}  // namespace

TEST_CASE("clique number on fixed graphs") {
    CHECK(clique_number(complete_graph(7)).omega == 7);
    CHECK(clique_number(cycle_graph(5)).omega == 2);
    CHECK(clique_number(path_graph(4)).omega == 2);
    CHECK(clique_number(build_graph(3, {})).omega == 1);
    auto r = clique_number(complete_graph(4));
    CHECK(r.witness.size() == 4);
    CHECK(is_clique(complete_graph(4), r.witness));
}

TEST_CASE("clique number matches brute force") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        Graph g = random_graph(9, 0.2 + 0.1 * static_cast<double>(seed % 7), seed * 53 + 11);
        auto r = clique_number(g);
        CHECK(r.omega == brute::omega(g));
        CHECK(static_cast<int>(r.witness.size()) == r.omega);
        CHECK(is_clique(g, r.witness));
    }
}

TEST_CASE("chromatic number on fixed graphs") {
    CHECK(chromatic_number(cycle_graph(5)).chi() == 3);
    CHECK(chromatic_number(cycle_graph(6)).chi() == 2);
    CHECK(chromatic_number(complete_graph(6)).chi() == 6);
    CHECK(chromatic_number(build_graph(4, {})).chi() == 1);
    Graph petersen = build_graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                                      {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                                      {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
    auto r = chromatic_number(petersen);
    CHECK(r.chi() == 3);
    CHECK(r.exact);
    CHECK(is_proper_coloring(petersen, r.coloring).proper);
    CHECK(r.coloring.is_partition_of(10));
}

TEST_CASE("chromatic number matches brute force") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        Graph g = random_graph(8, 0.2 + 0.1 * static_cast<double>(seed % 7), seed * 97 + 5);
        auto r = chromatic_number(g);
        CHECK(r.exact);
        CHECK(r.chi() == brute::chi(g));
        CHECK(is_proper_coloring(g, r.coloring).proper);
        CHECK(r.coloring.is_partition_of(g.n()));
        CHECK(r.coloring.num_colors() == r.chi());
    }
}

TEST_CASE("budget exhaustion reports bounds instead of lying") {
    // dense random graph, absurdly small node budget
    Graph g = random_graph(14, 0.5, 12345);
    try {
        auto r = chromatic_number(g, 1);
        // tiny budget may still finish if the bounds close at the root
        CHECK(r.exact);
    } catch (const OracleBudgetExceeded& e) {
        CHECK(e.lower >= 1);
        CHECK(e.upper >= e.lower);
    }
}

TEST_CASE("chi result refuses to answer when aborted") {
    ChiResult r;
    r.lower = 3;
    r.upper = 5;
    r.exact = false;
    CHECK_THROWS_AS(r.chi(), OracleBudgetExceeded);
}

TEST_CASE("two-clique union coloring") {
    SUBCASE("single cross edge") {
        Graph g = build_graph(4, {{0, 1}, {2, 3}, {0, 2}});
        auto c = color_two_clique_union(g, Bitset::of(4, {0, 1}), Bitset::of(4, {2, 3}));
        CHECK(c.num_colors() == 2);
        CHECK(is_proper_coloring(g, c).proper);
        CHECK(chromatic_number(g).chi() == 2);
    }
    SUBCASE("random instances match the exact oracle") {
        std::mt19937_64 rng(2024);
        for (int trial = 0; trial < 60; ++trial) {
            std::uniform_int_distribution<int> sz(1, 8);
            const int k1 = sz(rng), k2 = sz(rng);
            const int n = k1 + k2;
            std::vector<std::pair<int, int>> es;
            for (int u = 0; u < k1; ++u)
                for (int v = u + 1; v < k1; ++v) es.emplace_back(u, v);
            for (int u = k1; u < n; ++u)
                for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
            std::bernoulli_distribution cross(0.4);
            for (int u = 0; u < k1; ++u)
                for (int v = k1; v < n; ++v)
                    if (cross(rng)) es.emplace_back(u, v);
            Graph g = build_graph(n, es);
            Bitset a(n), b(n);
            for (int u = 0; u < k1; ++u) a.set(u);
            for (int v = k1; v < n; ++v) b.set(v);
            auto c = color_two_clique_union(g, a, b);
            CHECK(is_proper_coloring(g, c).proper);
            CHECK(c.num_colors() == chromatic_number(g).chi());
        }
    }
    SUBCASE("rejects bad inputs") {
        Graph g = build_graph(4, {{0, 1}, {1, 2}});
        CHECK_THROWS_AS(color_two_clique_union(g, Bitset::of(4, {0, 2}), Bitset::of(4, {3})),
                        std::invalid_argument);  // {0,2} is not a clique
        CHECK_THROWS_AS(color_two_clique_union(g, Bitset::of(4, {0, 1}), Bitset::of(4, {1})),
                        std::invalid_argument);  // overlap
    }
}

TEST_CASE("in-class perfectness test") {
    CHECK_FALSE(is_perfect_in_class(cycle_graph(5)));
    CHECK_FALSE(is_perfect_in_class(cycle_graph(7)));
    CHECK_FALSE(is_perfect_in_class(gstar()));
    CHECK(is_perfect_in_class(cycle_graph(6)));
    CHECK(is_perfect_in_class(complete_graph(5)));
    CHECK(is_perfect_in_class(path_graph(6)));
    // on members, the flag must coincide with chi == omega on every
    // induced subgraph; spot-check the graph itself
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        auto mg = sample_class_member(9, 0.3, seed * 17 + 2, 200);
        if (!mg) continue;
        if (is_perfect_in_class(*mg))
            CHECK(chromatic_number(*mg).chi() == clique_number(*mg).omega);
    }
}

TEST_CASE("oracle budget default is positive") {
    CHECK(default_oracle_budget() > 0);
}
