#include "immcoh/algebra.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "immcoh/linalg.hpp"

namespace immcoh {

Generator::Generator(std::string name_, int degree_)
    : Generator(std::move(name_), degree_, degree_ % 2 == 0 ? Parity::Even : Parity::Odd)
{
}

Generator::Generator(std::string name_, int degree_, Parity parity_)
    : name(std::move(name_)), degree(degree_), parity(parity_)
{
    if (degree < 1)
        throw ValidationError("generator '" + name + "' must have degree >= 1");
    if ((degree % 2 == 0) != (parity == Parity::Even))
        throw ValidationError("generator '" + name + "' parity does not match degree mod 2");
}

static void check_exps(const GeneratorList& gens, const std::vector<int>& exps)
{
    if (exps.size() != gens.size())
        throw ValidationError("monomial does not match presentation (generator count)");
    for (size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] < 0)
            throw ValidationError("negative exponent");
        if (gens[i].parity == Parity::Odd && exps[i] > 1)
            throw ValidationError("odd generator '" + gens[i].name + "' with exponent >= 2");
    }
}

Monomial make_monomial(const GeneratorList& gens, std::vector<int> exps)
{
    check_exps(gens, exps);
    Monomial m;
    m.exps = std::move(exps);
    m.degree = 0;
    for (size_t i = 0; i < m.exps.size(); ++i)
        m.degree += m.exps[i] * gens[i].degree;
    return m;
}

Monomial one_monomial(const GeneratorList& gens)
{
    return make_monomial(gens, std::vector<int>(gens.size(), 0));
}

Polynomial& Polynomial::add_term(const Monomial& m, const Rational& c)
{
    if (c == 0)
        return *this;
    auto it = terms.find(m);
    if (it == terms.end()) {
        terms.emplace(m, c);
    }
    else {
        it->second += c;
        if (it->second == 0)
            terms.erase(it);
    }
    return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const
{
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms)
        r.add_term(m, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const
{
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms)
        r.add_term(m, -c);
    return r;
}

Polynomial Polynomial::scaled(const Rational& c) const
{
    Polynomial r;
    if (c == 0)
        return r;
    for (const auto& [m, k] : terms)
        r.terms.emplace(m, k * c);
    return r;
}

int Polynomial::homogeneous_degree() const
{
    if (terms.empty())
        return 0;
    int d = terms.begin()->first.degree;
    for (const auto& [m, c] : terms)
        if (m.degree != d)
            return -1;
    return d;
}

Polynomial poly_of(const GeneratorList& gens, const Monomial& m, const Rational& c)
{
    check_exps(gens, m.exps);
    Polynomial p;
    p.add_term(m, c);
    return p;
}

Polynomial generator_poly(const GeneratorList& gens, int index)
{
    std::vector<int> e(gens.size(), 0);
    e[static_cast<size_t>(index)] = 1;
    return poly_of(gens, make_monomial(gens, std::move(e)));
}

AlgebraPresentation::AlgebraPresentation(GeneratorList gens, std::vector<Polynomial> rels)
    : generators(std::move(gens)), relations(std::move(rels))
{
    std::set<std::string> names;
    for (const auto& g : generators)
        if (!names.insert(g.name).second)
            throw ValidationError("duplicate generator name '" + g.name + "'");
    for (const auto& r : relations) {
        for (const auto& [m, c] : r.terms)
            check_exps(generators, m.exps);
        int d = r.homogeneous_degree();
        if (d == -1)
            throw ValidationError("inhomogeneous relation");
        if (!r.is_zero() && d == 0)
            throw ValidationError("degree-0 relation");
    }
}

int AlgebraPresentation::generator_index(const std::string& name) const
{
    for (size_t i = 0; i < generators.size(); ++i)
        if (generators[i].name == name)
            return static_cast<int>(i);
    throw ValidationError("unknown generator '" + name + "' in presentation");
}

Monomial monomial_product(const GeneratorList& gens, const Monomial& a, const Monomial& b, int& sign)
{
    // Koszul bookkeeping: merging the canonical factorisations moves every
    // odd factor of b past the odd factors of a with larger index.
    check_exps(gens, a.exps);
    check_exps(gens, b.exps);
    const size_t n = gens.size();
    long crossings = 0;
    long odd_in_a_above = 0;  // number of odd factors of a with index > i
    for (size_t i = 0; i < n; ++i)
        if (gens[i].parity == Parity::Odd)
            odd_in_a_above += a.exps[i];
    Monomial r;
    r.exps.resize(n);
    r.degree = a.degree + b.degree;
    for (size_t i = 0; i < n; ++i) {
        if (gens[i].parity == Parity::Odd) {
            odd_in_a_above -= a.exps[i];
            if (a.exps[i] + b.exps[i] > 1) {
                sign = 0;  // odd square vanishes over Q
                return Monomial{};
            }
            crossings += static_cast<long>(b.exps[i]) * odd_in_a_above;
        }
        r.exps[i] = a.exps[i] + b.exps[i];
    }
    sign = crossings % 2 == 0 ? 1 : -1;
    return r;
}

Polynomial multiply(const Polynomial& a, const Polynomial& b, const AlgebraPresentation& p)
{
    Polynomial r;
    for (const auto& [ma, ca] : a.terms) {
        for (const auto& [mb, cb] : b.terms) {
            int sign = 0;
            Monomial m = monomial_product(p.generators, ma, mb, sign);
            if (sign != 0)
                r.add_term(m, ca * cb * sign);
        }
    }
    return r;
}

static void enumerate_monomials(const GeneratorList& gens, size_t i, int remaining,
                                std::vector<int>& exps, std::vector<Monomial>& out)
{
    if (remaining == 0) {
        for (size_t j = i; j < gens.size(); ++j)
            exps[j] = 0;
        out.push_back(make_monomial(gens, exps));
        return;
    }
    if (i == gens.size())
        return;
    const int d = gens[i].degree;
    const int emax = gens[i].parity == Parity::Odd ? 1 : remaining / d;
    for (int e = 0; e <= emax && e * d <= remaining; ++e) {
        exps[i] = e;
        enumerate_monomials(gens, i + 1, remaining - e * d, exps, out);
    }
    exps[i] = 0;
}

std::vector<Monomial> monomials_of_degree(const GeneratorList& gens, int d)
{
    if (d < 0)
        return {};
    std::vector<Monomial> out;
    std::vector<int> exps(gens.size(), 0);
    enumerate_monomials(gens, 0, d, exps, out);
    std::sort(out.begin(), out.end());
    return out;
}

TruncatedSeries hilbert_series_free(const GeneratorList& gens, int order)
{
    if (order < 0)
        throw ValidationError("truncation order must be >= 0");
    TruncatedSeries h = TruncatedSeries::one(order);
    for (const auto& g : gens) {
        if (g.parity == Parity::Even) {
            h = h * TruncatedSeries::geometric(g.degree, order);
        }
        else {
            h = h * (TruncatedSeries::one(order) + TruncatedSeries::monomial(g.degree, order));
        }
    }
    return h;
}

GradedDims basis_up_to(const AlgebraPresentation& p, int order)
{
    if (order < 0)
        throw ValidationError("truncation order must be >= 0");
    GradedDims gd;
    gd.N = order;
    for (int d = 0; d <= order; ++d) {
        const std::vector<Monomial> basis = monomials_of_degree(p.generators, d);
        if (basis.empty())
            continue;
        std::map<Monomial, int> index;
        for (size_t i = 0; i < basis.size(); ++i)
            index.emplace(basis[i], static_cast<int>(i));

        RowBasis span(static_cast<int>(basis.size()));
        for (const auto& rel : p.relations) {
            const int dr = rel.homogeneous_degree();
            if (rel.is_zero() || dr > d)
                continue;
            for (const auto& m : monomials_of_degree(p.generators, d - dr)) {
                Polynomial prod = multiply(poly_of(p.generators, m), rel, p);
                if (prod.is_zero())
                    continue;
                Vec row(basis.size(), Rational(0));
                for (const auto& [mm, c] : prod.terms)
                    row[index.at(mm)] = c;
                span.insert(std::move(row));
            }
        }
        gd.set(d, static_cast<long>(basis.size()) - span.rank());
    }
    return gd;
}

GeneratorList free_gca_on(const GradedDims& v)
{
    GeneratorList gens;
    for (const auto& [d, k] : v.dims) {
        if (k == 0)
            continue;
        if (d < 1)
            throw ValidationError("free algebra input must be concentrated in degrees >= 1");
        for (long i = 0; i < k; ++i) {
            std::ostringstream name;
            name << 'g' << d;
            if (k > 1)
                name << static_cast<char>('a' + (i % 26));
            if (k > 26)
                name << i / 26;
            gens.emplace_back(name.str(), d);
        }
    }
    return gens;
}

std::string to_json(const GradedDims& gd)
{
    std::ostringstream os;
    os << "{\"N\": " << gd.N << ", \"dims\": {";
    bool first = true;
    for (const auto& [d, k] : gd.dims) {
        if (!first)
            os << ", ";
        first = false;
        os << '"' << d << "\": " << k;
    }
    os << "}}";
    return os.str();
}

}  // namespace immcoh
