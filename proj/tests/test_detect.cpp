#include <doctest.h>

#include <random>

#include "brute.hpp"
#include "nearopt/detect.hpp"
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

}  // namespace

TEST_CASE("patterns") {
    auto p = Pattern::p2_plus_p4();
    CHECK(p.graph.n() == 6);
    CHECK(p.graph.edge_count() == 4);
    CHECK(p.graph.adjacent(0, 1));
    CHECK_FALSE(p.graph.adjacent(1, 2));
    auto k = Pattern::k4_minus_e();
    CHECK(k.graph.n() == 4);
    CHECK(k.graph.edge_count() == 5);
    CHECK_FALSE(k.graph.adjacent(2, 3));
    CHECK(Pattern::path(4).graph.edge_count() == 3);
    CHECK(Pattern::cycle(5).graph.edge_count() == 5);
    CHECK_THROWS_AS(Pattern::path(0), std::invalid_argument);
    CHECK_THROWS_AS(Pattern::cycle(2), std::invalid_argument);
}

TEST_CASE("find_induced on paths") {
    auto hit = find_induced(Pattern::path(7).graph, Pattern::p2_plus_p4());
    REQUIRE(hit.has_value());
    CHECK(hit->map == std::vector<int>{0, 1, 3, 4, 5, 6});
    CHECK(embedding_is_induced(Pattern::path(7).graph, Pattern::p2_plus_p4(), *hit));
    CHECK_FALSE(find_induced(Pattern::path(6).graph, Pattern::p2_plus_p4()).has_value());
    CHECK_FALSE(find_induced(complete_graph(4), Pattern::k4_minus_e()).has_value());
}

TEST_CASE("find_induced against brute force") {
    const auto p2p4 = Pattern::p2_plus_p4();
    const auto k4e = Pattern::k4_minus_e();
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const int n = 6 + static_cast<int>(seed % 3);
        Graph g = random_graph(n, 0.3 + 0.05 * static_cast<double>(seed % 7), seed * 977 + 3);
        for (const auto* pat : {&p2p4, &k4e}) {
            auto hit = find_induced(g, *pat);
            CHECK(hit.has_value() == brute::contains_induced(g, pat->graph));
            if (hit) CHECK(embedding_is_induced(g, *pat, *hit));
        }
    }
}

TEST_CASE("class membership") {
    CHECK(check_class_membership(complete_graph(5)).member());
    CHECK(check_class_membership(cycle_graph(5)).member());
    CHECK(check_class_membership(cycle_graph(6)).member());
    CHECK(check_class_membership(cycle_graph(7)).member());
    CHECK(check_class_membership(build_graph(1, {})).member());

    auto diamond = check_class_membership(Pattern::k4_minus_e().graph);
    CHECK_FALSE(diamond.member());
    CHECK(diamond.p2p4_free);
    CHECK_FALSE(diamond.k4e_free);
    REQUIRE(diamond.violation.has_value());
    CHECK(diamond.violation->pattern == "K4-e");

    auto forest = check_class_membership(Pattern::p2_plus_p4().graph);
    CHECK_FALSE(forest.member());
    CHECK_FALSE(forest.p2p4_free);
    REQUIRE(forest.violation.has_value());
    CHECK(forest.violation->pattern == "P2+P4");

    // wheel on five spokes: hub + two consecutive rim vertices + the next
    // one give a diamond
    std::vector<std::pair<int, int>> wheel = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}};
    for (int i = 0; i < 5; ++i) wheel.emplace_back(i, 5);
    auto w = check_class_membership(build_graph(6, wheel));
    CHECK_FALSE(w.member());
    CHECK_FALSE(w.k4e_free);

    CHECK_FALSE(check_class_membership(cycle_graph(9)).member());  // long odd hole
}

TEST_CASE("membership matches brute force on random graphs") {
    const auto p2p4 = Pattern::p2_plus_p4().graph;
    const auto k4e = Pattern::k4_minus_e().graph;
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        Graph g = random_graph(8, 0.25 + 0.05 * static_cast<double>(seed % 8), seed * 131 + 7);
        const bool expect = !brute::contains_induced(g, p2p4) && !brute::contains_induced(g, k4e);
        CHECK(check_class_membership(g).member() == expect);
    }
}

TEST_CASE("c5 enumeration is canonical and exhaustive") {
    Graph petersen = build_graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                                      {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                                      {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
    auto cycles = enumerate_induced_c5(petersen);
    CHECK(cycles.size() == 12);
    for (std::size_t i = 0; i < cycles.size(); ++i) {
        const auto& c = cycles[i];
        // canonical: smallest vertex first, smaller neighbor second
        CHECK(c[0] == *std::min_element(c.begin(), c.end()));
        CHECK(c[1] < c[4]);
        for (int j = 0; j < 5; ++j) {
            CHECK(petersen.adjacent(c[j], c[(j + 1) % 5]));
            CHECK_FALSE(petersen.adjacent(c[j], c[(j + 2) % 5]));
        }
        if (i + 1 < cycles.size()) CHECK(c < cycles[i + 1]);
    }
    auto first = find_induced_c5(petersen);
    REQUIRE(first.has_value());
    CHECK(*first == cycles.front());
    CHECK(enumerate_induced_c5(cycle_graph(6)).empty());
    CHECK(enumerate_induced_c5(complete_graph(6)).empty());
}

TEST_CASE("c7 detection") {
    auto c7 = find_induced_c7(cycle_graph(7));
    REQUIRE(c7.has_value());
    CHECK(*c7 == std::array<int, 7>{0, 1, 2, 3, 4, 5, 6});
    CHECK_FALSE(find_induced_c7(cycle_graph(6)).has_value());
    CHECK_FALSE(find_induced_c7(cycle_graph(5)).has_value());
    auto gs = gstar();
    auto found = find_induced_c7(gs);
    REQUIRE(found.has_value());
    CHECK(enumerate_induced_c5(gs).empty());
}
