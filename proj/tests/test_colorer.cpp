#include <doctest.h>

#include <json.hpp>

#include "brute.hpp"
#include "nearopt/colorer.hpp"
#include "nearopt/detect.hpp"
#include "nearopt/oracles.hpp"
#include "nearopt/witnesses.hpp"

using namespace nearopt;

namespace {

Graph c5_plus(std::vector<std::pair<int, int>> extra, int n) {
    std::vector<std::pair<int, int>> es = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}};
    es.insert(es.end(), extra.begin(), extra.end());
    return build_graph(n, es);
}

Graph c7_plus(std::vector<std::pair<int, int>> extra, int n) {
    std::vector<std::pair<int, int>> es = {{0, 1}, {1, 2}, {2, 3}, {3, 4},
                                           {4, 5}, {5, 6}, {6, 0}};
    es.insert(es.end(), extra.begin(), extra.end());
    return build_graph(n, es);
}

// Full validity audit of a constructed certificate against the graph,
// with the exact oracles as ground truth.
ColoringCertificate expect_good_cert(const Graph& g, CaseTag want) {
    REQUIRE(check_class_membership(g).member());
    auto cert = color_near_optimal(g);
    CHECK(cert.tag == want);
    CHECK(cert.validated);
    Coloring col = cert.coloring();
    CHECK(col.is_partition_of(g.n()));
    CHECK(is_proper_coloring(g, col).proper);
    CHECK(cert.colors_used == static_cast<int>(cert.classes.size()));
    const int omega = clique_number(g).omega;
    CHECK(cert.colors_used <= std::max(6, omega));
    if (cert.bound_claim == "=omega") {
        REQUIRE(cert.omega.has_value());
        CHECK(*cert.omega == omega);
        CHECK(cert.colors_used == omega);
    } else {
        CHECK(cert.bound_claim == "<=6");
        CHECK(cert.colors_used <= 6);
    }
    CHECK(chromatic_number(g).chi() <= cert.colors_used);
    std::string why;
    CHECK_MESSAGE(revalidate_certificate(g, cert.to_json(), &why), why);
    return cert;
}

Bitset class_of(const ColoringCertificate& cert, int v) {
    for (const auto& cls : cert.classes)
        if (cls.test(v)) return cls;
    FAIL("vertex not covered");
    return Bitset(1);
}

}  // namespace

TEST_CASE("two touching B-sets") {
    SUBCASE("minimal configuration") {
        Graph g = c5_plus({{5, 0}, {5, 1}, {6, 4}, {6, 0}}, 7);
        auto cert = expect_good_cert(g, CaseTag::F1);
        CHECK(cert.anchor == std::vector<int>{0, 1, 2, 3, 4});
        CHECK(cert.colors_used == 4);
        CHECK(class_of(cert, 5) == Bitset::of(7, {2, 5, 6}));  // v3, b1, b5 share a color
    }
    SUBCASE("two B3 vertices force the sixth color") {
        Graph g = c5_plus({{5, 0}, {5, 1}, {6, 4}, {6, 0},
                           {7, 2}, {7, 3}, {8, 2}, {8, 3}, {7, 8}, {7, 5}, {8, 6}}, 9);
        auto cert = expect_good_cert(g, CaseTag::F1);
        CHECK(cert.anchor == std::vector<int>{0, 1, 2, 3, 4});
        CHECK(cert.colors_used == 5);
        CHECK(class_of(cert, 7) == Bitset::of(9, {1, 4, 7}));
        CHECK(class_of(cert, 8) == Bitset::of(9, {8}));
    }
}

TEST_CASE("B-set with a far A-set") {
    SUBCASE("minimal configuration ends in the final split") {
        Graph g = c5_plus({{5, 0}, {5, 1}, {6, 2}}, 7);
        auto cert = expect_good_cert(g, CaseTag::F2);
        CHECK(cert.anchor == std::vector<int>{0, 1, 2, 3, 4});
        CHECK(cert.colors_used == 3);
    }
    SUBCASE("nonempty B4 branch") {
        Graph g = c5_plus({{5, 0}, {5, 1}, {6, 2}, {7, 3}, {7, 4}, {5, 6}}, 8);
        auto cert = expect_good_cert(g, CaseTag::F2);
        CHECK(cert.colors_used <= 6);
    }
    SUBCASE("two B1 vertices branch") {
        Graph g = c5_plus({{5, 0}, {5, 1}, {6, 0}, {6, 1}, {5, 6}, {7, 2}, {7, 5}}, 8);
        auto cert = expect_good_cert(g, CaseTag::F2);
        CHECK(cert.colors_used <= 6);
    }
    SUBCASE("small B3 branch") {
        Graph g = c5_plus({{5, 0}, {5, 1}, {6, 2}, {7, 2}, {7, 3}}, 8);
        auto cert = expect_good_cert(g, CaseTag::F2);
        CHECK(cert.colors_used <= 6);
    }
    SUBCASE("large B3 takes the omega branch") {
        Graph g = c5_plus({{5, 0}, {5, 1}, {6, 2},
                           {7, 2}, {7, 3}, {8, 2}, {8, 3}, {9, 2}, {9, 3},
                           {7, 8}, {7, 9}, {8, 9}}, 10);
        REQUIRE(clique_number(g).omega == 5);
        auto cert = expect_good_cert(g, CaseTag::F2);
        CHECK(cert.bound_claim == "=omega");
        CHECK(cert.colors_used == 5);
        REQUIRE(cert.omega_branch.has_value());
        CHECK(cert.omega_branch->clique_a == Bitset::of(10, {5}));
        CHECK(cert.omega_branch->clique_b == Bitset::of(10, {7, 8, 9}));
    }
}

TEST_CASE("two opposite B-sets") {
    SUBCASE("small sides") {
        Graph g = c5_plus({{5, 0}, {5, 1}, {6, 3}, {6, 4}}, 7);
        auto cert = expect_good_cert(g, CaseTag::F3);
        CHECK(cert.anchor == std::vector<int>{0, 1, 2, 3, 4});
        CHECK(cert.colors_used == 3);
    }
    SUBCASE("large B1 takes the omega branch directly") {
        Graph g = c5_plus({{5, 0}, {5, 1}, {6, 0}, {6, 1}, {7, 0}, {7, 1},
                           {5, 6}, {5, 7}, {6, 7}, {8, 3}, {8, 4}}, 9);
        REQUIRE(clique_number(g).omega == 5);
        auto cert = expect_good_cert(g, CaseTag::F3);
        CHECK(cert.bound_claim == "=omega");
        CHECK(cert.colors_used == 5);
    }
    SUBCASE("large B4 reaches the omega branch through the reversal") {
        Graph g = c5_plus({{5, 0}, {5, 1}, {6, 3}, {6, 4}, {7, 3}, {7, 4},
                           {8, 3}, {8, 4}, {6, 7}, {6, 8}, {7, 8}}, 9);
        REQUIRE(clique_number(g).omega == 5);
        auto cert = expect_good_cert(g, CaseTag::F3);
        CHECK(cert.bound_claim == "=omega");
        CHECK(cert.colors_used == 5);
        // the published anchor is the relabeled cycle
        REQUIRE(cert.omega_branch.has_value());
        CHECK(cert.omega_branch->clique_a == Bitset::of(9, {6, 7, 8}));
    }
}

TEST_CASE("single B-set") {
    SUBCASE("minimal configuration") {
        Graph g = c5_plus({{5, 0}, {5, 1}}, 6);
        auto cert = expect_good_cert(g, CaseTag::F4);
        CHECK(cert.anchor == std::vector<int>{0, 1, 2, 3, 4});
        CHECK(cert.colors_used == 4);
    }
    SUBCASE("D1 branch") {
        Graph g = c5_plus({{5, 0}, {5, 1}, {6, 1}, {6, 4}}, 7);
        auto cert = expect_good_cert(g, CaseTag::F4);
        CHECK(cert.colors_used <= 6);
    }
    SUBCASE("D2 relabels onto the D1 branch") {
        Graph g = c5_plus({{5, 0}, {5, 1}, {6, 0}, {6, 2}}, 7);
        auto cert = expect_good_cert(g, CaseTag::F4);
        CHECK(cert.colors_used <= 6);
        // relabeled anchor still starts at the B-edge
        CHECK(cert.anchor == std::vector<int>{1, 0, 4, 3, 2});
    }
    SUBCASE("three B1 vertices stay within six colors") {
        Graph g = c5_plus({{5, 0}, {5, 1}, {6, 0}, {6, 1}, {7, 0}, {7, 1},
                           {5, 6}, {5, 7}, {6, 7}}, 8);
        auto cert = expect_good_cert(g, CaseTag::F4);
        CHECK(cert.bound_claim == "<=6");
        CHECK(cert.colors_used == 5);
    }
    SUBCASE("six B1 vertices take the residual-clique tail") {
        std::vector<std::pair<int, int>> extra;
        for (int v = 5; v <= 10; ++v) {
            extra.emplace_back(v, 0);
            extra.emplace_back(v, 1);
            for (int w = v + 1; w <= 10; ++w) extra.emplace_back(v, w);
        }
        Graph g = c5_plus(extra, 11);
        REQUIRE(clique_number(g).omega == 8);
        auto cert = expect_good_cert(g, CaseTag::F4);
        CHECK(cert.bound_claim == "=omega");
        CHECK(cert.colors_used == 8);
        REQUIRE(cert.omega_branch.has_value());
        CHECK(cert.omega_branch->residual_clique == Bitset::of(11, {9, 10}));
    }
    SUBCASE("A4 split in the residual-clique tail") {
        std::vector<std::pair<int, int>> extra;
        for (int v = 5; v <= 10; ++v) {
            extra.emplace_back(v, 0);
            extra.emplace_back(v, 1);
            for (int w = v + 1; w <= 10; ++w) extra.emplace_back(v, w);
        }
        extra.emplace_back(11, 3);
        extra.emplace_back(11, 6);  // adjacent to x, so it lands in the second part
        Graph g = c5_plus(extra, 12);
        auto cert = expect_good_cert(g, CaseTag::F4);
        CHECK(cert.bound_claim == "=omega");
        CHECK(cert.colors_used == 8);
        CHECK(class_of(cert, 11).test(7));  // shares the y-class
    }
}

TEST_CASE("cycle with no B-sets") {
    SUBCASE("bare five-cycle") {
        auto cert = expect_good_cert(cycle_graph(5), CaseTag::PureC5);
        CHECK(cert.colors_used == 3);
        CHECK(cert.classes[0] == Bitset::of(5, {1, 3}));  // S1 = {v2, v4}
    }
    SUBCASE("with A and D attachments") {
        Graph g = c5_plus({{5, 0}, {6, 1}, {6, 3}}, 7);
        auto cert = expect_good_cert(g, CaseTag::PureC5);
        CHECK(cert.colors_used == 4);
        CHECK(cert.anchor == std::vector<int>{0, 1, 2, 3, 4});
    }
}

TEST_CASE("seven-cycle graphs stay within three colors") {
    SUBCASE("bare seven-cycle") {
        auto cert = expect_good_cert(cycle_graph(7), CaseTag::C7Case);
        CHECK(cert.colors_used == 3);
    }
    SUBCASE("X leaf") {
        auto cert = expect_good_cert(gstar(), CaseTag::C7Case);
        CHECK(cert.colors_used == 3);
        CHECK(chromatic_number(gstar()).chi() == 3);
    }
    SUBCASE("Y leaf") {
        Graph g = c7_plus({{7, 0}, {7, 1}, {7, 5}}, 8);
        REQUIRE(enumerate_induced_c5(g).empty());
        auto cert = expect_good_cert(g, CaseTag::C7Case);
        CHECK(cert.colors_used <= 3);
    }
    SUBCASE("L leaf goes through the reversal") {
        Graph g = c7_plus({{7, 0}, {7, 1}, {7, 3}}, 8);
        REQUIRE(enumerate_induced_c5(g).empty());
        auto cert = expect_good_cert(g, CaseTag::C7Case);
        CHECK(cert.colors_used <= 3);
    }
    SUBCASE("Q families with a gap and an M vertex") {
        Graph g = c7_plus({{7, 1}, {7, 3}, {8, 2}, {8, 4}, {7, 8}}, 10);
        REQUIRE(enumerate_induced_c5(g).empty());
        auto cert = expect_good_cert(g, CaseTag::C7Case);
        CHECK(cert.colors_used <= 3);
    }
    SUBCASE("all Q families occupied") {
        std::vector<std::pair<int, int>> extra;
        for (int i = 0; i < 7; ++i) {
            extra.emplace_back(7 + i, (i + 6) % 7);
            extra.emplace_back(7 + i, (i + 1) % 7);
            extra.emplace_back(7 + i, 7 + (i + 1) % 7);
        }
        Graph g = c7_plus(extra, 14);
        REQUIRE(enumerate_induced_c5(g).empty());
        auto cert = expect_good_cert(g, CaseTag::C7Case);
        CHECK(cert.colors_used == 3);
    }
}

TEST_CASE("perfect leftovers use the exact oracle") {
    auto k4 = expect_good_cert(complete_graph(4), CaseTag::Perfect);
    CHECK(k4.colors_used == 4);
    CHECK(k4.bound_claim == "=omega");
    CHECK(expect_good_cert(build_graph(3, {}), CaseTag::Perfect).colors_used == 1);
    CHECK(expect_good_cert(cycle_graph(6), CaseTag::Perfect).colors_used == 2);
    CHECK(expect_good_cert(path_graph(5), CaseTag::Perfect).colors_used == 2);
    CHECK(expect_good_cert(complete_graph(1), CaseTag::Perfect).colors_used == 1);
}

TEST_CASE("case functions guard their preconditions") {
    const std::array<int, 5> id5 = {0, 1, 2, 3, 4};
    CHECK_THROWS_AS(color_case_f1(cycle_graph(5), id5), LemmaViolation);
    CHECK_THROWS_AS(color_case_f2(cycle_graph(5), id5), LemmaViolation);
    CHECK_THROWS_AS(color_case_f3(cycle_graph(5), id5), LemmaViolation);
    CHECK_THROWS_AS(color_case_f4(cycle_graph(5), id5), LemmaViolation);
    Graph f4 = c5_plus({{5, 0}, {5, 1}}, 6);
    CHECK_THROWS_AS(color_case_pure_c5(f4, id5), LemmaViolation);
    try {
        color_case_f1(cycle_graph(5), id5);
        FAIL("expected a violation");
    } catch (const LemmaViolation& e) {
        CHECK(e.case_path == "F1");
        CHECK(std::string(e.what()).find("B1") != std::string::npos);
    }
    // a vertex outside the trace families aborts the seven-cycle case
    Graph bad = c7_plus({{7, 0}}, 8);
    CHECK_THROWS_AS(color_case_c7(bad, {0, 1, 2, 3, 4, 5, 6}), UnclassifiedVertexError);
}

TEST_CASE("certificate json layout") {
    Graph g = c5_plus({{5, 0}, {5, 1}}, 6);
    auto cert = color_near_optimal(g);
    auto j = nlohmann::json::parse(cert.to_json());
    CHECK(j["case"] == "F4");
    CHECK(j["anchor"] == nlohmann::json({0, 1, 2, 3, 4}));
    CHECK(j["classes"].is_array());
    CHECK(j["classes"].size() == 4);
    CHECK(j["colors_used"] == 4);
    CHECK(j["bound_claim"] == "<=6");
    CHECK(j["omega"].is_null());
    CHECK(j["validated"] == true);
    // omega-claiming certificates carry the clique size
    Graph f2w = c5_plus({{5, 0}, {5, 1}, {6, 2},
                         {7, 2}, {7, 3}, {8, 2}, {8, 3}, {9, 2}, {9, 3},
                         {7, 8}, {7, 9}, {8, 9}}, 10);
    auto j2 = nlohmann::json::parse(color_near_optimal(f2w).to_json());
    CHECK(j2["bound_claim"] == "=omega");
    CHECK(j2["omega"] == 5);
}

TEST_CASE("revalidation rejects tampered certificates") {
    Graph g = c5_plus({{5, 0}, {5, 1}}, 6);
    auto cert = color_near_optimal(g);
    std::string why;
    REQUIRE(revalidate_certificate(g, cert.to_json(), &why));

    auto j = nlohmann::json::parse(cert.to_json());
    SUBCASE("merged classes with an internal edge") {
        auto merged = j;
        for (const auto& v : merged["classes"][1]) merged["classes"][0].push_back(v);
        merged["classes"].erase(1);
        merged["colors_used"] = 3;
        CHECK_FALSE(revalidate_certificate(g, merged.dump(), &why));
    }
    SUBCASE("dropped vertex") {
        auto dropped = j;
        dropped["classes"][0].erase(0);
        CHECK_FALSE(revalidate_certificate(g, dropped.dump(), &why));
        CHECK(why.find("partition") != std::string::npos);
    }
    SUBCASE("wrong color count") {
        auto off = j;
        off["colors_used"] = 2;
        CHECK_FALSE(revalidate_certificate(g, off.dump(), &why));
    }
    SUBCASE("wrong omega claim") {
        auto wrong = j;
        wrong["bound_claim"] = "=omega";
        wrong["omega"] = 4;
        CHECK_FALSE(revalidate_certificate(g, wrong.dump(), &why));
    }
    SUBCASE("garbage") {
        CHECK_FALSE(revalidate_certificate(g, "{", &why));
        CHECK_FALSE(revalidate_certificate(g, "{}", &why));
    }
}

TEST_CASE("coloring is deterministic") {
    Graph g = c5_plus({{5, 0}, {5, 1}, {6, 2}, {7, 2}, {7, 3}}, 8);
    CHECK(color_near_optimal(g).to_json() == color_near_optimal(g).to_json());
    ColorOptions fb;
    fb.fallback_exact = true;
    CHECK(color_near_optimal(g, fb).to_json() == color_near_optimal(g).to_json());
}

TEST_CASE("non-members are rejected before coloring") {
    CHECK_THROWS_AS(color_near_optimal(Pattern::k4_minus_e().graph), NotAMember);
    CHECK_THROWS_AS(color_near_optimal(cycle_graph(9)), NotAMember);
}
