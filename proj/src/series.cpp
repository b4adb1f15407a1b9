#include "immcoh/series.hpp"

namespace immcoh {

TruncatedSeries::TruncatedSeries(int order_, std::string var_)
    : var(std::move(var_)), order(order_), coeffs(order_ + 1, Rational(0))
{
    if (order_ < 0)
        throw ValidationError("series order must be >= 0");
}

TruncatedSeries TruncatedSeries::one(int order, std::string var)
{
    TruncatedSeries s(order, std::move(var));
    s.coeffs[0] = 1;
    return s;
}

TruncatedSeries TruncatedSeries::monomial(int exponent, int order, const Rational& c)
{
    TruncatedSeries s(order);
    if (exponent < 0)
        throw ValidationError("series exponent must be >= 0");
    if (exponent <= order)
        s.coeffs[exponent] = c;
    return s;
}

static void check_same_order(const TruncatedSeries& a, const TruncatedSeries& b)
{
    if (a.order != b.order)
        throw ValidationError("series order mismatch");
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const
{
    check_same_order(*this, o);
    TruncatedSeries r(order, var);
    for (int k = 0; k <= order; ++k)
        r.coeffs[k] = coeffs[k] + o.coeffs[k];
    return r;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const
{
    check_same_order(*this, o);
    TruncatedSeries r(order, var);
    for (int k = 0; k <= order; ++k)
        r.coeffs[k] = coeffs[k] - o.coeffs[k];
    return r;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const
{
    check_same_order(*this, o);
    TruncatedSeries r(order, var);
    for (int i = 0; i <= order; ++i) {
        if (coeffs[i] == 0)
            continue;
        for (int j = 0; i + j <= order; ++j)
            if (o.coeffs[j] != 0)
                r.coeffs[i + j] += coeffs[i] * o.coeffs[j];
    }
    return r;
}

bool TruncatedSeries::operator==(const TruncatedSeries& o) const
{
    return order == o.order && coeffs == o.coeffs;
}

TruncatedSeries TruncatedSeries::inverse() const
{
    if (coeffs[0] == 0)
        throw ValidationError("cannot invert a series with zero constant term");
    TruncatedSeries r(order, var);
    Rational inv0 = 1 / coeffs[0];
    r.coeffs[0] = inv0;
    for (int k = 1; k <= order; ++k) {
        Rational acc(0);
        for (int i = 1; i <= k; ++i)
            acc += coeffs[i] * r.coeffs[k - i];
        r.coeffs[k] = -inv0 * acc;
    }
    return r;
}

TruncatedSeries TruncatedSeries::geometric(int d, int order)
{
    if (d <= 0)
        throw ValidationError("geometric series needs degree >= 1");
    TruncatedSeries s(order);
    for (int k = 0; k <= order; k += d)
        s.coeffs[k] = 1;
    return s;
}

bool TruncatedSeries::all_integral() const
{
    for (const auto& c : coeffs)
        if (!is_integral(c))
            return false;
    return true;
}

}  // namespace immcoh
