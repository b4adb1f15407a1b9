#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "immcoh/chart.hpp"
#include "immcoh/specseq.hpp"
#include "immcoh/verify.hpp"

using namespace immcoh;

namespace {

std::vector<long> kappa_table(int n, int max_degree)
{
    // dimensions of Q[kappa_1, ..., kappa_{2n-2}] by unbounded knapsack
    std::vector<long> ways(max_degree + 1, 0);
    ways[0] = 1;
    for (int i = 1; i <= 2 * n - 2; ++i)
        for (int k = 2 * i; k <= max_degree; ++k)
            ways[k] += ways[k - 2 * i];
    return ways;
}

Polynomial named_generator(const SpectralPage& page, const std::string& name)
{
    return generator_poly(page.generator_list(),
                          page.presentation().generator_index(name));
}

}  // namespace

TEST_CASE("E2 page of the immersion sequence")
{
    SpectralPage t4 = build_e2_immersion(2, 4);
    CHECK(t4.dim_at(0, 0) == 1);
    CHECK(t4.dim_at(2, 0) == 1);
    CHECK(t4.dim_at(4, 0) == 2);
    CHECK(t4.dim_at(0, 5) == 0);

    SpectralPage t7 = build_e2_immersion(2, 7);
    CHECK(t7.dim_at(0, 5) == 1);
    CHECK(t7.dim_at(0, 7) == 1);

    SpectralPage t9 = build_e2_immersion(2, 9);
    CHECK(t9.dim_at(3, 6) == 1);  // l_9
    CHECK(t9.dim_at(2, 5) == 1);  // kappa_1 x_5

    CHECK_THROWS_AS(build_e2_immersion(1, 10), ValidationError);
}

TEST_CASE("Leibniz extension on monomials")
{
    SpectralPage page = relabel_page(build_e2_immersion(2, 14), 6);
    DifferentialRule rule;
    rule.r = 6;
    rule.images.emplace("x_5", named_generator(page, "kappa_3"));
    page = extend_leibniz(page, rule);

    const auto& gens = page.generator_list();
    const auto& pres = page.presentation();

    // d(kappa_1 x_5) = kappa_1 kappa_3
    Polynomial k1x5 = multiply(named_generator(page, "kappa_1"), named_generator(page, "x_5"), pres);
    REQUIRE(k1x5.terms.size() == 1);
    Polynomial image = page.differential_of(k1x5.terms.begin()->first);
    Polynomial expected = multiply(named_generator(page, "kappa_1"), named_generator(page, "kappa_3"), pres);
    CHECK(image == expected);

    // d(x_5 x_7) = kappa_3 x_7 when d(x_7) = 0
    Polynomial x5x7 = multiply(named_generator(page, "x_5"), named_generator(page, "x_7"), pres);
    REQUIRE(x5x7.terms.size() == 1);
    Polynomial image2 = page.differential_of(x5x7.terms.begin()->first);
    Polynomial expected2 = multiply(named_generator(page, "kappa_3"), named_generator(page, "x_7"), pres);
    CHECK(image2 == expected2);

    // d(1) = 0
    CHECK(page.differential_of(one_monomial(gens)).is_zero());
}

TEST_CASE("rule validation")
{
    SpectralPage page = relabel_page(build_e2_immersion(2, 12), 6);
    DifferentialRule wrong;
    wrong.r = 6;
    wrong.images.emplace("x_5", named_generator(page, "kappa_2"));  // (4,0) is not (6,0)
    CHECK_THROWS_AS(extend_leibniz(page, wrong), ValidationError);

    DifferentialRule mismatched;
    mismatched.r = 5;
    CHECK_THROWS_AS(extend_leibniz(page, mismatched), ValidationError);

    DifferentialRule unknown;
    unknown.r = 6;
    unknown.images.emplace("nope", named_generator(page, "kappa_3"));
    CHECK_THROWS_AS(extend_leibniz(page, unknown), ValidationError);
}

TEST_CASE("a differential that does not square to zero is rejected")
{
    // u at (0,11) maps to v at (6,6), v maps to w at (12,1): d(d(u)) = w != 0
    std::vector<BigradedGenerator> gens{{"u", 0, 11}, {"v", 6, 6}, {"w", 12, 1}};
    SpectralPage page = build_page(gens, 6, 25);
    DifferentialRule rule;
    rule.r = 6;
    rule.images.emplace("u", generator_poly(page.generator_list(), 1));
    rule.images.emplace("v", generator_poly(page.generator_list(), 2));
    CHECK_THROWS_AS(extend_leibniz(page, rule), std::logic_error);
}

TEST_CASE("turning with zero differential changes nothing but the index")
{
    SpectralPage page = build_e2_immersion(2, 10);
    SpectralPage next = turn_page(page);
    CHECK(next.page_index() == 3);
    CHECK(next.dims() == page.dims());
}

TEST_CASE("two successive differentials on a Koszul-style cascade")
{
    // c at (2,0) polynomial; a at (0,5) with d_6(a) = c^3, then b at (0,11)
    // with d_12(b) = c^6. After both turns the surviving algebra is
    // Q[c]/(c^3) together with nothing else in the window.
    std::vector<BigradedGenerator> gens{{"c", 2, 0}, {"a", 0, 5}, {"b", 0, 11}};
    SpectralPage page = build_page(gens, 6, 16);
    const GeneratorList& gl = page.generator_list();

    DifferentialRule d6;
    d6.r = 6;
    Polynomial c3 = poly_of(gl, make_monomial(gl, {3, 0, 0}));
    d6.images.emplace("a", c3);
    SpectralPage e7 = turn_page(extend_leibniz(page, d6));
    // E7 in degrees <= 10: Q[c]/(c^3) tensor Lambda[b]; c^k a killed for all k
    CHECK(e7.dim_at(0, 0) == 1);
    CHECK(e7.dim_at(2, 0) == 1);
    CHECK(e7.dim_at(4, 0) == 1);
    CHECK(e7.dim_at(6, 0) == 0);
    CHECK(e7.dim_at(8, 0) == 0);
    CHECK(e7.dim_at(0, 5) == 0);
    CHECK(e7.dim_at(2, 5) == 0);
    CHECK(e7.dim_at(0, 11) == 1);  // b untouched by d_6

    SpectralPage e12 = relabel_page(e7, 12);
    DifferentialRule d12;
    d12.r = 12;
    d12.images.emplace("b", poly_of(gl, make_monomial(gl, {6, 0, 0})));
    SpectralPage e13 = turn_page(extend_leibniz(e12, d12));
    // c^6 was already a boundary on the previous page, so b now survives
    // nothing new dies: d_12(b) = 0 in E_12
    CHECK(e13.dim_at(0, 11) == 1);
    CHECK(e13.dim_at(12, 0) == 0);
    CHECK(e13.dim_at(2, 0) == 1);
    CHECK(e13.dim_at(4, 0) == 1);
}

TEST_CASE("module generator counts factor out the base row")
{
    SpectralPage page = build_e2_immersion(2, 12);
    auto counts = page.module_generator_counts();
    CHECK(counts.at({0, 0}) == 1);
    CHECK(counts.at({0, 5}) == 1);   // x_5
    CHECK(counts.at({0, 7}) == 1);   // x_7
    CHECK(counts.at({3, 6}) == 1);   // l_9
    CHECK(counts.at({5, 6}) == 1);   // l_11
    CHECK(counts.at({0, 12}) == 1);  // x_5 x_7
    CHECK(counts.size() == 6);       // kappa multiples carry no dots
}

TEST_CASE("an acyclic pair cancels")
{
    std::vector<BigradedGenerator> gens{{"x", 0, 5}, {"y", 6, 0}};
    SpectralPage page = build_page(gens, 6, 12);
    DifferentialRule rule;
    rule.r = 6;
    rule.images.emplace("x", generator_poly(page.generator_list(), 1));
    SpectralPage next = turn_page(extend_leibniz(page, rule));
    CHECK(next.dim_at(0, 5) == 0);
    CHECK(next.dim_at(6, 0) == 0);
    CHECK(next.dim_at(0, 0) == 1);
    // the pair propagates multiplicatively: d(xy) = y^2
    CHECK(next.dim_at(6, 5) == 0);
    CHECK(next.dim_at(12, 0) == 0);
}

TEST_CASE("immersion run converges to the kappa algebra (n = 2)")
{
    ImmersionSSRun run = run_immersion_ss(2, 20);
    CHECK(run.safe_total == 12);
    const std::vector<long> expected = kappa_table(2, 12);
    // 1,0,1,0,2,0,2,0,3,0,3,0,4
    CHECK(expected == std::vector<long>{1, 0, 1, 0, 2, 0, 2, 0, 3, 0, 3, 0, 4});
    for (int m = 0; m <= 12; ++m)
        CHECK(run.einf_by_total.at(m) == expected[m]);
    CHECK(run.einf_concentrated_on_base);

    // kappa_3 and kappa_4 die: only surviving monomials remain at q = 0
    CHECK(run.einf().dim_at(6, 0) == 2);
    CHECK(run.e2().dim_at(6, 0) == 3);
    CHECK(run.einf().dim_at(8, 0) == 3);
    CHECK(run.e2().dim_at(8, 0) == 5);

    CHECK(run.history.size() == 4);
    CHECK(run.history[0].r == 2);
    CHECK(run.history[1].r == 7);
    CHECK(run.history[2].r == 8);
    CHECK(run.history[3].r == 9);
}

TEST_CASE("unit choices do not change the dimensions")
{
    UnitChoices units;
    units["x_5"] = Rational(2, 3);
    units["x_7"] = Rational(-5);
    units["l_9"] = Rational(7, 2);
    units["l_11"] = Rational(-1, 4);
    units["l_13"] = Rational(3);
    ImmersionSSRun plain = run_immersion_ss(2, 14);
    ImmersionSSRun scaled = run_immersion_ss(2, 14, &units);
    REQUIRE(plain.history.size() == scaled.history.size());
    for (size_t i = 0; i < plain.history.size(); ++i)
        CHECK(plain.history[i].dims == scaled.history[i].dims);

    UnitChoices zero;
    zero["x_5"] = Rational(0);
    CHECK_THROWS_AS(run_immersion_ss(2, 14, &zero), ValidationError);
}

TEST_CASE("Euler characteristic is conserved over the truncated region")
{
    ImmersionSSRun run = run_immersion_ss(2, 14);
    std::vector<long> chi;
    for (const auto& page : run.pages) {
        long acc = 0;
        for (const auto& [pq, dim] : page.dims())
            acc += ((pq.first + pq.second) % 2 == 0 ? 1 : -1) * dim;
        chi.push_back(acc);
    }
    for (size_t i = 1; i < chi.size(); ++i)
        CHECK(chi[i] == chi[0]);
}

TEST_CASE("chart artifacts")
{
    ImmersionSSRun run = run_immersion_ss(2, 14);
    const std::string svg = chart_svg(run);
    CHECK(svg_well_formed(svg));
    CHECK(svg.find("<circle") != std::string::npos);
    CHECK(svg.find("<line") != std::string::npos);

    const std::string tsv = pages_tsv(run);
    CHECK(tsv.rfind("r\tp\tq\tdim\n", 0) == 0);
    CHECK(tsv.find("\n2\t0\t0\t1\n") != std::string::npos);

    const std::string js = run_json(run, true);
    CHECK(js.find("\"n\": 2") != std::string::npos);
    CHECK(js.find("\"verified\": true") != std::string::npos);
}
