#pragma once

#include "immcoh/rational.hpp"

#include <string>
#include <vector>

namespace immcoh {

/// One-variable formal power series with exact coefficients, truncated at a
/// fixed order. All arithmetic stays below the truncation order.
struct TruncatedSeries {
    std::string var = "t";
    int order = 0;
    std::vector<Rational> coeffs;  // indices 0..order

    TruncatedSeries() = default;
    explicit TruncatedSeries(int order_, std::string var_ = "t");

    static TruncatedSeries one(int order, std::string var = "t");
    static TruncatedSeries monomial(int exponent, int order, const Rational& c = Rational(1));

    Rational at(int k) const { return (k >= 0 && k <= order) ? coeffs[k] : Rational(0); }

    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator-(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const TruncatedSeries& o) const;
    bool operator==(const TruncatedSeries& o) const;

    /// Multiplicative inverse; requires a unit constant term.
    TruncatedSeries inverse() const;

    /// Series 1/(1-t^d) = 1 + t^d + t^2d + ...
    static TruncatedSeries geometric(int d, int order);

    bool all_integral() const;
};

}  // namespace immcoh
