#include "immcoh/grassmann.hpp"

#include <sstream>

namespace immcoh {

GrassmannianModel grassmannian_model(int d)
{
    if (d < 3)
        throw ValidationError("Grassmannian model needs ambient dimension d >= 3");
    GrassmannianModel m;
    m.d = d;
    m.manifold_dim = 2 * (d - 2);
    if (d == 3 || d == 4)
        return m;  // S^2 and S^2 x S^2, tables hard-coded in grassmannian_betti

    if (d % 2 == 1) {
        // Q[e]/(e^{2n}), d = 2n+1, deg e = 2
        const int n = (d - 1) / 2;
        GeneratorList gens{Generator("e", 2)};
        Polynomial rel;
        rel.add_term(make_monomial(gens, {2 * n}), 1);
        m.presentation = AlgebraPresentation(gens, {rel});
    }
    else {
        // Q[e, delta]/(delta^2, e^n - 2 delta e), d = 2n, deg delta = 2n-2
        const int n = d / 2;
        GeneratorList gens{Generator("e", 2), Generator("delta", 2 * n - 2)};
        Polynomial delta_sq;
        delta_sq.add_term(make_monomial(gens, {0, 2}), 1);
        Polynomial euler_rel;
        euler_rel.add_term(make_monomial(gens, {n, 0}), 1);
        euler_rel.add_term(make_monomial(gens, {1, 1}), -2);
        m.presentation = AlgebraPresentation(gens, {delta_sq, euler_rel});
    }
    return m;
}

GradedDims grassmannian_betti(int d, int order)
{
    GrassmannianModel m = grassmannian_model(d);
    const int top = std::min(order, m.manifold_dim);
    GradedDims gd;
    gd.N = top;
    if (d == 3) {
        gd.set(0, 1);
        if (top >= 2)
            gd.set(2, 1);
        return gd;
    }
    if (d == 4) {
        gd.set(0, 1);
        if (top >= 2)
            gd.set(2, 2);
        if (top >= 4)
            gd.set(4, 1);
        return gd;
    }
    return basis_up_to(*m.presentation, top);
}

GradedDims thom_shift(const GradedDims& v, int shift)
{
    GradedDims r;
    r.N = v.N - shift;
    for (const auto& [deg, k] : v.dims)
        r.set(deg - shift, k);
    return r;
}

StableAlgebra stable_cohomology(int d, int order)
{
    GradedDims shifted = thom_shift(grassmannian_betti(d, 2 * (d - 2)));
    GradedDims positive;
    positive.N = std::max(shifted.N, 0);
    for (const auto& [deg, k] : shifted.dims)
        if (deg >= 1)
            positive.set(deg, k);

    StableAlgebra out;
    out.d = d;

    // Canonical names. The kappa ladder takes one generator per even degree
    // 2i; in the even-d case the one extra class in degree 2n-4 is Delta.
    for (const auto& [deg, k] : positive.dims) {
        if (deg % 2 != 0)
            throw ValidationError("unexpected odd-degree stable class");
        long extras = k - 1;
        std::ostringstream kn;
        kn << "kappa_" << deg / 2;
        out.generators.emplace_back(kn.str(), deg);
        if (extras > 0) {
            if (d % 2 != 0 || d < 6 || deg != d - 4 || extras != 1)
                throw ValidationError("stable class multiplicity does not match the expected table");
            out.generators.emplace_back("Delta", deg);
        }
    }
    out.hilbert = hilbert_series_free(out.generators, order);
    return out;
}

std::string to_json(const StableAlgebra& a)
{
    std::ostringstream os;
    os << "{\"d\": " << a.d << ", \"generators\": [";
    for (size_t i = 0; i < a.generators.size(); ++i) {
        if (i)
            os << ", ";
        os << "{\"name\": \"" << a.generators[i].name << "\", \"degree\": " << a.generators[i].degree
           << "}";
    }
    os << "], \"hilbert\": {\"N\": " << a.hilbert.order << ", \"coeffs\": [";
    for (int k = 0; k <= a.hilbert.order; ++k) {
        if (k)
            os << ", ";
        os << a.hilbert.coeffs[k];
    }
    os << "]}}";
    return os.str();
}

GradedDims imm_cohomology_hilbert(int g, int n, int order)
{
    if (n < 2)
        throw ValidationError("immersion-space cohomology needs 2n+1 >= 5");
    if (g < 0)
        throw ValidationError("genus must be >= 0");
    if (order < 0)
        throw ValidationError("truncation order must be >= 0");
    TruncatedSeries h = TruncatedSeries::one(order);
    h = h * (TruncatedSeries::one(order) + TruncatedSeries::monomial(4 * n - 3, order));
    h = h * (TruncatedSeries::one(order) + TruncatedSeries::monomial(4 * n - 1, order));
    const TruncatedSeries sym = TruncatedSeries::geometric(4 * n - 2, order);
    for (int i = 0; i < 2 * g; ++i)
        h = h * sym;
    GradedDims gd;
    gd.N = order;
    for (int k = 0; k <= order; ++k) {
        if (!is_integral(h.coeffs[k]) || !h.coeffs[k].get_num().fits_slong_p())
            throw ValidationError("Hilbert coefficient out of range");
        gd.set(k, h.coeffs[k].get_num().get_si());
    }
    return gd;
}

}  // namespace immcoh
