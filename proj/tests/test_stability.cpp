#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "immcoh/stability.hpp"

using namespace immcoh;

TEST_CASE("closed-surface stable ranges")
{
    CHECK(stable_range({DimClass3::Dim3, 13, MapKind::Closed, RangeMode::Iso}) == 4);
    CHECK(stable_range({DimClass3::DimAbove3, 3, MapKind::Closed, RangeMode::Iso}) == 1);
    // below zero the range is empty
    CHECK(stable_range({DimClass3::Dim3, 0, MapKind::Closed, RangeMode::Iso}) == -1);
    CHECK(stable_range({DimClass3::Dim3, 2, MapKind::Closed, RangeMode::Iso}) == -1);
    CHECK(stable_range({DimClass3::Dim3, 3, MapKind::Closed, RangeMode::Iso}) == 0);
}

TEST_CASE("stabilisation map ranges")
{
    CHECK(stable_range({DimClass3::DimAbove3, 3, MapKind::Alpha, RangeMode::Epi}) == 2);
    CHECK(stable_range({DimClass3::DimAbove3, 3, MapKind::Alpha, RangeMode::Iso}) == 1);
    CHECK(stable_range({DimClass3::Dim3, 8, MapKind::Alpha, RangeMode::Epi}) == 3);
    CHECK(stable_range({DimClass3::Dim3, 8, MapKind::Beta, RangeMode::Epi}) == 2);
    // gamma is an isomorphism exactly where beta is an epimorphism
    for (long long g = 0; g <= 20; ++g)
        for (DimClass3 dim : {DimClass3::Dim3, DimClass3::DimAbove3}) {
            const long long beta_epi = stable_range({dim, g, MapKind::Beta, RangeMode::Epi});
            CHECK(stable_range({dim, g, MapKind::Gamma, RangeMode::Iso}) == beta_epi);
            CHECK(stable_range({dim, g, MapKind::Gamma, RangeMode::Epi}) == beta_epi);
        }
}

TEST_CASE("range properties")
{
    for (long long g = 0; g <= 40; ++g) {
        for (DimClass3 dim : {DimClass3::Dim3, DimClass3::DimAbove3}) {
            for (MapKind kind : {MapKind::Closed, MapKind::Alpha, MapKind::Beta, MapKind::Gamma}) {
                const long long epi = stable_range({dim, g, kind, RangeMode::Epi});
                const long long iso = stable_range({dim, g, kind, RangeMode::Iso});
                CHECK(epi >= iso);
                CHECK(iso >= -1);
                if (g > 0) {
                    CHECK(epi >= stable_range({dim, g - 1, kind, RangeMode::Epi}));
                    CHECK(iso >= stable_range({dim, g - 1, kind, RangeMode::Iso}));
                }
            }
        }
        CHECK(stable_range({DimClass3::Dim3, g, MapKind::Closed, RangeMode::Iso}) <=
              stable_range({DimClass3::DimAbove3, g, MapKind::Closed, RangeMode::Iso}));
    }
    CHECK_THROWS_AS(stable_range({DimClass3::Dim3, -1, MapKind::Closed, RangeMode::Iso}),
                    ValidationError);
}

TEST_CASE("stabiliser orders")
{
    auto g2 = stabilizer_orders(2);
    REQUIRE(g2.size() == 1);
    CHECK(g2[0].k == 1);
    CHECK(g2[0].h == 2);

    auto g5 = stabilizer_orders(5);
    REQUIRE(g5.size() == 3);
    CHECK(g5[0].k == 1);
    CHECK(g5[0].h == 5);
    CHECK(g5[1].k == 2);
    CHECK(g5[1].h == 3);
    CHECK(g5[2].k == 4);
    CHECK(g5[2].h == 2);

    auto g7 = stabilizer_orders(7);
    std::vector<long long> ks;
    for (const auto& o : g7)
        ks.push_back(o.k);
    CHECK(ks == std::vector<long long>{1, 2, 3, 6});

    CHECK_THROWS_AS(stabilizer_orders(1), ValidationError);
}

TEST_CASE("every feasible order divides g - 1")
{
    for (long long g = 2; g <= 200; ++g)
        for (const auto& o : stabilizer_orders(g)) {
            CHECK((g - 1) % o.k == 0);
            CHECK(o.k * (2 - 2 * o.h) == 2 - 2 * g);
        }
}
