#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sgr/io.hpp"

using namespace sgr;

TEST_CASE("betti table json shape") {
    auto t = betti_table(NumericalSemigroup({31, 37, 41}));
    auto j = to_json(t);
    CHECK(j["pd"] == 2);
    CHECK(j["degrees"]["1"] == json({185, 279, 328}));
    CHECK(j["degrees"]["2"] == json({390, 402}));
    CHECK(j.dump() == R"({"pd":2,"degrees":{"1":[185,279,328],"2":[390,402]}})");
}

TEST_CASE("affine betti table json uses vector degrees") {
    auto steps = ci_family(2, {1, 1}, 1);
    auto j = to_json(steps.front().table);
    CHECK(j["degrees"]["1"] == json::array({{2, 2}}));
}

TEST_CASE("verdict json") {
    NumericalSemigroup s({155, 185, 205, 328, 410});
    auto v = is_sifre(betti_table(s), s);
    auto j = to_json(v);
    CHECK(j["holds"] == false);
    REQUIRE(!j["witnesses"].empty());
    bool dup = false;
    for (const auto& w : j["witnesses"])
        if (w["certificate"] == "duplicate") dup = true;
    CHECK(dup);

    NumericalSemigroup ok({31, 37, 41});
    auto jok = to_json(is_sifre(betti_table(ok), ok));
    CHECK(jok.dump() == R"({"holds":true,"witnesses":[]})");
}

TEST_CASE("witness certificates are factorizations") {
    auto bad = extend(NumericalSemigroup({31, 37, 41}), 68, 3);
    auto v = extension_has_sifre(bad, betti_table(bad.base));
    REQUIRE(!v.holds);
    auto j = to_json(v);
    for (const auto& w : j["witnesses"]) {
        REQUIRE(w["certificate"].is_array());
        CHECK(w["certificate"].size() == 3);
    }
}

TEST_CASE("gluing and extension json") {
    NumericalSemigroup s1({31, 37, 41}), s2({4, 5});
    auto g = glue_numerical(s1, s2, 109, 19);
    auto j = to_json(g);
    CHECK(j["glued"] == json({436, 545, 589, 703, 779}));
    CHECK(j["alpha"] == 2071);

    auto e = extend(NumericalSemigroup({3, 5}), 8, 3);
    auto je = to_json(e);
    CHECK(je["extended"] == json({8, 9, 15}));
    CHECK(je["u"] == json({1, 1}));
    CHECK(je["alpha"] == 24);
}

TEST_CASE("gap data json") {
    auto j = to_json(NumericalSemigroup({4, 5}).gap_data());
    CHECK(j["gaps"] == json({1, 2, 3, 6, 7, 11}));
    CHECK(j["frobenius"] == 11);
    CHECK(j["genus"] == 6);
    CHECK(j["pseudo_frobenius"] == json({11}));
}

TEST_CASE("herzog json keys") {
    auto j = to_json(herzog_data(NumericalSemigroup({31, 37, 41})));
    CHECK(j["alpha"] == json({9, 5, 8}));
    CHECK(j["cross"]["12"] == 2);
    CHECK(j["cross"]["31"] == 7);
    CHECK(j["b"] == json({402, 390}));
}

TEST_CASE("bresinsky json") {
    auto j = to_json(bresinsky_semigroup(1, 2, 2, 1, 2, 1, 1, 1));
    CHECK(j["m"] == json({13, 8, 14, 11}));
    CHECK(j["generators"] == json({8, 11, 13, 14}));
    CHECK(j["cross"]["43"] == 1);
}

TEST_CASE("json output is deterministic") {
    NumericalSemigroup s({31, 37, 41});
    auto first = to_json(betti_table(s)).dump();
    auto second = to_json(betti_table(NumericalSemigroup({41, 31, 37}))).dump();
    CHECK(first == second);

    auto w = to_json(make_search_window(s, betti_table(s), NumericalSemigroup({4, 5}),
                                        betti_table(NumericalSemigroup({4, 5}))));
    CHECK(w["b_max"] == 31);
}
