#pragma once

#include "immcoh/rational.hpp"
#include "immcoh/series.hpp"

#include <map>
#include <string>
#include <vector>

namespace immcoh {

enum class Parity { Even, Odd };

/// A named generator of a graded-commutative Q-algebra. Over Q an
/// odd-degree class is exterior (its square vanishes) and an even-degree
/// class is polynomial, so parity is forced to equal degree mod 2.
struct Generator {
    std::string name;
    int degree = 0;
    Parity parity = Parity::Even;

    Generator() = default;
    Generator(std::string name_, int degree_);
    Generator(std::string name_, int degree_, Parity parity_);
};

using GeneratorList = std::vector<Generator>;

/// Exponent vector over a fixed generator list, graded-lex ordered
/// (degree first, then exponents by generator index). Odd generators only
/// ever carry exponent 0 or 1.
struct Monomial {
    std::vector<int> exps;
    int degree = 0;

    bool operator==(const Monomial& o) const { return degree == o.degree && exps == o.exps; }
    bool operator<(const Monomial& o) const
    {
        if (degree != o.degree)
            return degree < o.degree;
        return exps < o.exps;
    }
};

Monomial make_monomial(const GeneratorList& gens, std::vector<int> exps);
Monomial one_monomial(const GeneratorList& gens);

/// Finite Q-linear combination of monomials; zero coefficients are never
/// stored.
struct Polynomial {
    std::map<Monomial, Rational> terms;

    bool is_zero() const { return terms.empty(); }
    bool operator==(const Polynomial& o) const { return terms == o.terms; }

    Polynomial& add_term(const Monomial& m, const Rational& c);
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial scaled(const Rational& c) const;

    /// Degree check: -1 when inhomogeneous, the common degree otherwise
    /// (0 for the zero polynomial).
    int homogeneous_degree() const;
};

Polynomial poly_of(const GeneratorList& gens, const Monomial& m, const Rational& c = Rational(1));
Polynomial generator_poly(const GeneratorList& gens, int index);

struct AlgebraPresentation {
    GeneratorList generators;
    std::vector<Polynomial> relations;

    AlgebraPresentation() = default;
    AlgebraPresentation(GeneratorList gens, std::vector<Polynomial> rels);

    int generator_index(const std::string& name) const;  // throws on unknown name
};

/// Betti table: dimension per degree up to a stated truncation order.
/// Degrees may be negative (Thom-shifted tables keep them for reporting).
struct GradedDims {
    int N = 0;
    std::map<int, long> dims;

    long at(int degree) const
    {
        auto it = dims.find(degree);
        return it == dims.end() ? 0 : it->second;
    }
    void set(int degree, long dim)
    {
        if (dim != 0)
            dims[degree] = dim;
        else
            dims.erase(degree);
    }
    bool operator==(const GradedDims& o) const { return N == o.N && dims == o.dims; }
};

std::string to_json(const GradedDims& gd);

/// Product with the Koszul sign rule: transposing two odd factors costs a
/// sign, and an odd generator squared is zero.
Polynomial multiply(const Polynomial& a, const Polynomial& b, const AlgebraPresentation& p);

Monomial monomial_product(const GeneratorList& gens, const Monomial& a, const Monomial& b, int& sign);

/// All monomials of exact degree d over gens (odd exponents at most 1),
/// in graded-lex order.
std::vector<Monomial> monomials_of_degree(const GeneratorList& gens, int d);

/// Hilbert series of the free graded-commutative algebra on gens:
/// prod 1/(1-t^d) over even generators times prod (1+t^d) over odd ones.
TruncatedSeries hilbert_series_free(const GeneratorList& gens, int order);

/// Dimensions of the quotient of the free algebra by the relation ideal,
/// degree by degree: dim_d = #monomials(d) - rank{m*r : deg(m*r)=d}.
GradedDims basis_up_to(const AlgebraPresentation& p, int order);

/// One generator per unit of dimension, of matching degree and parity,
/// named g<degree> with letter suffixes when a degree carries several.
GeneratorList free_gca_on(const GradedDims& v);

}  // namespace immcoh
