#include <doctest.h>

#include "alexmod/seifert.hpp"
#include "test_util.hpp"

using namespace alexmod;
using namespace alexmod::knot;
using exactlin::IntMatrix;
using laurent::LaurentPoly;
using testutil::poly;

namespace {

SeifertMatrix trefoil() { return SeifertMatrix{IntMatrix::from_rows({{-1, 1}, {0, -1}})}; }
SeifertMatrix figure8() { return SeifertMatrix{IntMatrix::from_rows({{1, 1}, {0, -1}})}; }
SeifertMatrix knot52() { return SeifertMatrix{IntMatrix::from_rows({{1, 1}, {0, 2}})}; }

}  // namespace

TEST_CASE("seifert_to_presentation: entrywise t·V - V^T") {
    auto p = seifert_to_presentation(trefoil());
    CHECK(p.relators == 2);
    CHECK(p.generators == 2);
    CHECK(p.matrix(0, 0) == poly({{0, 1}, {1, -1}}));
    CHECK(p.matrix(0, 1) == poly({{1, 1}}));
    CHECK(p.matrix(1, 0) == poly({{0, -1}}));
    CHECK(p.matrix(1, 1) == poly({{0, 1}, {1, -1}}));

    auto p8 = seifert_to_presentation(figure8());
    CHECK(p8.matrix(0, 0) == poly({{0, -1}, {1, 1}}));
    CHECK(p8.matrix(0, 1) == poly({{1, 1}}));
    CHECK(p8.matrix(1, 0) == poly({{0, -1}}));
    CHECK(p8.matrix(1, 1) == poly({{0, 1}, {1, -1}}));

    auto empty = seifert_to_presentation(SeifertMatrix{IntMatrix(0, 0)});
    CHECK(empty.generators == 0);
    CHECK(present::order(empty) == LaurentPoly(1));

    CHECK_THROWS_AS(seifert_to_presentation(SeifertMatrix{IntMatrix::identity(3)}),
                    DimensionError);
    CHECK_THROWS_AS(seifert_to_presentation(SeifertMatrix{IntMatrix(2, 3)}), DimensionError);
}

TEST_CASE("pairing diagnostic") {
    CHECK(pairing_ok(trefoil()));
    CHECK(pairing_ok(figure8()));
    CHECK(pairing_ok(knot52()));
    CHECK(!pairing_ok(SeifertMatrix{IntMatrix::identity(2)}));  // V - V^T = 0
}

TEST_CASE("analyze_knot: trefoil") {
    auto rep = analyze_knot(trefoil(), false);
    CHECK(rep.alexander == poly({{0, 1}, {1, -1}, {2, 1}}));
    CHECK(rep.monic);
    CHECK(rep.palindromic);
    CHECK(rep.content == 1);
    CHECK(!rep.decomposition.has_value());
}

TEST_CASE("analyze_knot: figure eight") {
    auto rep = analyze_knot(figure8(), false);
    CHECK(rep.alexander == poly({{0, 1}, {1, -3}, {2, 1}}));
    CHECK(rep.monic);
    CHECK(rep.palindromic);
    CHECK(rep.content == 1);
}

TEST_CASE("analyze_knot: 5_2 is not monic") {
    auto rep = analyze_knot(knot52(), false);
    CHECK(rep.alexander == poly({{0, 2}, {1, -3}, {2, 2}}));
    CHECK(!rep.monic);
    CHECK(rep.palindromic);
    CHECK(rep.content == 1);
}

TEST_CASE("analyze_knot: alexander equals the pencil determinant up to units") {
    std::mt19937_64 rng(61);
    for (int iter = 0; iter < 60; ++iter) {
        std::size_t g = 1 + testutil::pick(rng, 2);
        auto v = testutil::random_matrix(rng, 2 * g, 2 * g, -3, 3);
        SeifertMatrix s{v};
        auto rep = analyze_knot(s, false);
        auto det = det_laurent(seifert_to_presentation(s).matrix);
        CHECK(rep.alexander == normalize_unit(det));
    }
}

TEST_CASE("analyze_knot: decomposition attached on request") {
    auto rep = analyze_knot(trefoil(), true);
    REQUIRE(rep.decomposition.has_value());
    CHECK(rep.decomposition->checks.all());
    REQUIRE(rep.decomposition->lattice.has_value());
    CHECK(rep.decomposition->lattice->d == 2);
    CHECK(rep.decomposition->index_f == Int(1));
    CHECK(rep.decomposition->index_g == Int(1));
    CHECK(rep.monic == rep.decomposition->checks.monic);

    auto rep52 = analyze_knot(knot52(), true);
    REQUIRE(rep52.decomposition.has_value());
    REQUIRE(rep52.decomposition->lattice.has_value());
    CHECK(*rep52.decomposition->index_f == 2);
    CHECK(*rep52.decomposition->index_g == 2);
    CHECK(!rep52.monic);
    CHECK(rep52.decomposition->checks.order_match);
    CHECK(rep52.decomposition->checks.c0_index);
    CHECK(rep52.decomposition->checks.cd_index);
}
