#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "immcoh/grassmann.hpp"

#include <json.hpp>

using namespace immcoh;

TEST_CASE("Betti tables of the low-dimensional Grassmannians")
{
    GradedDims s2 = grassmannian_betti(3, 10);
    CHECK(s2.at(0) == 1);
    CHECK(s2.at(2) == 1);
    CHECK(s2.dims.size() == 2);

    GradedDims s2s2 = grassmannian_betti(4, 4);
    CHECK(s2s2.at(0) == 1);
    CHECK(s2s2.at(2) == 2);
    CHECK(s2s2.at(4) == 1);

    GradedDims d5 = grassmannian_betti(5, 10);
    for (int k = 0; k <= 10; ++k)
        CHECK(d5.at(k) == ((k % 2 == 0 && k <= 6) ? 1 : 0));

    GradedDims d6 = grassmannian_betti(6, 8);
    const std::vector<long> expected{1, 1, 2, 1, 1};
    for (int k = 0; k <= 8; k += 2)
        CHECK(d6.at(k) == expected[k / 2]);

    CHECK_THROWS_AS(grassmannian_betti(2, 4), ValidationError);
}

TEST_CASE("Poincare duality and Euler characteristics up to d = 12")
{
    for (int d = 3; d <= 12; ++d) {
        const int top = 2 * (d - 2);
        GradedDims gd = grassmannian_betti(d, top);
        long chi = 0;
        for (int k = 0; k <= top; ++k) {
            CHECK(gd.at(k) == gd.at(top - k));
            if (k % 2 == 1)
                CHECK(gd.at(k) == 0);
            chi += (k % 2 == 0 ? 1 : -1) * gd.at(k);
        }
        CHECK(chi == 2 * (d / 2));
        if (d % 2 == 0)
            CHECK(gd.at(d - 2) == 2);
    }
}

TEST_CASE("Thom shift")
{
    GradedDims s2 = grassmannian_betti(3, 2);
    GradedDims shifted = thom_shift(s2);
    CHECK(shifted.at(-2) == 1);
    CHECK(shifted.at(0) == 1);
    CHECK(shifted.dims.size() == 2);

    GradedDims empty;
    CHECK(thom_shift(empty).dims.empty());

    GradedDims d4 = thom_shift(grassmannian_betti(4, 4));
    CHECK(d4.at(-2) == 1);
    CHECK(d4.at(0) == 2);
    CHECK(d4.at(2) == 1);
    long positive = 0;
    for (const auto& [deg, k] : d4.dims)
        if (deg > 0)
            positive += k;
    CHECK(positive == 1);  // a unique class in positive degree

    // shift then unshift is the identity
    GradedDims round = thom_shift(thom_shift(d4, -2), 2);
    CHECK(round == d4);
}

TEST_CASE("stable cohomology presentations")
{
    StableAlgebra d3 = stable_cohomology(3, 10);
    CHECK(d3.generators.empty());
    CHECK(d3.hilbert == TruncatedSeries::one(10));

    StableAlgebra d4 = stable_cohomology(4, 10);
    REQUIRE(d4.generators.size() == 1);
    CHECK(d4.generators[0].name == "kappa_1");
    CHECK(d4.generators[0].degree == 2);

    StableAlgebra d7 = stable_cohomology(7, 20);
    REQUIRE(d7.generators.size() == 4);
    for (int i = 0; i < 4; ++i) {
        CHECK(d7.generators[i].name == "kappa_" + std::to_string(i + 1));
        CHECK(d7.generators[i].degree == 2 * (i + 1));
    }

    StableAlgebra d6 = stable_cohomology(6, 20);
    REQUIRE(d6.generators.size() == 4);
    int deltas = 0;
    for (const auto& g : d6.generators)
        if (g.name == "Delta") {
            ++deltas;
            CHECK(g.degree == 2);
        }
    CHECK(deltas == 1);

    CHECK_THROWS_AS(stable_cohomology(2, 10), ValidationError);
}

TEST_CASE("odd-dimensional stable Hilbert series matches the product formula")
{
    for (int n = 2; n <= 4; ++n) {
        StableAlgebra alg = stable_cohomology(2 * n + 1, 24);
        TruncatedSeries expected = TruncatedSeries::one(24);
        for (int i = 1; i <= 2 * n - 2; ++i)
            expected = expected * TruncatedSeries::geometric(2 * i, 24);
        CHECK(alg.hilbert == expected);
    }
}

TEST_CASE("immersion-space cohomology dimensions")
{
    GradedDims g0 = imm_cohomology_hilbert(0, 2, 12);
    CHECK(g0.at(0) == 1);
    CHECK(g0.at(5) == 1);
    CHECK(g0.at(7) == 1);
    CHECK(g0.at(12) == 1);
    long total = 0;
    for (const auto& [deg, k] : g0.dims)
        total += k;
    CHECK(total == 4);

    GradedDims g2 = imm_cohomology_hilbert(2, 2, 12);
    CHECK(g2.at(6) == 4);
    CHECK(g2.at(12) == 11);

    CHECK_THROWS_AS(imm_cohomology_hilbert(2, 1, 12), ValidationError);
    CHECK_THROWS_AS(imm_cohomology_hilbert(-1, 2, 12), ValidationError);
}

TEST_CASE("stable algebra JSON shape")
{
    auto parsed = nlohmann::json::parse(to_json(stable_cohomology(7, 12)));
    CHECK(parsed["d"] == 7);
    REQUIRE(parsed["generators"].size() == 4);
    CHECK(parsed["generators"][0]["name"] == "kappa_1");
    CHECK(parsed["generators"][0]["degree"] == 2);
    REQUIRE(parsed["hilbert"]["coeffs"].size() == 13);
    CHECK(parsed["hilbert"]["N"] == 12);
    CHECK(parsed["hilbert"]["coeffs"][0] == 1);
    CHECK(parsed["hilbert"]["coeffs"][2] == 1);
    CHECK(parsed["hilbert"]["coeffs"][4] == 2);
}
