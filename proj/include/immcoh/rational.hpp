#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace immcoh {

// All coefficient arithmetic in this library is exact. Rationals back the
// graded-algebra layer, integers back the q-series layer.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1)
{
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integral(const Rational& r)
{
    return r.get_den() == 1;
}

// Raised by precondition and input validation failures. The CLI maps it to
// exit code 2.
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

inline long long floor_div(long long a, long long b)
{
    // b > 0; rounds toward minus infinity
    long long q = a / b;
    if (a % b != 0 && a < 0)
        --q;
    return q;
}

}  // namespace immcoh
