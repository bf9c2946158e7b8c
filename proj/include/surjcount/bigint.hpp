#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "surjcount/errors.hpp"

namespace surjcount {

// Counts grow as |V(H)|^|V(G)|; everything countable is arbitrary precision.
using Bigint = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Bigint bigint_pow(const Bigint& base, std::uint64_t exp) {
    Bigint result = 1;
    Bigint b = base;
    while (exp > 0) {
        if (exp & 1) result *= b;
        b *= b;
        exp >>= 1;
    }
    return result;
}

inline Bigint factorial(std::uint64_t k) {
    Bigint r = 1;
    for (std::uint64_t i = 2; i <= k; ++i) r *= i;
    return r;
}

inline Bigint binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Bigint r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;  // exact at every step
    }
    return r;
}

// Quotient of an exact division; throws SolveError on a remainder.
inline Bigint exact_div(const Bigint& num, const Bigint& den, const char* context) {
    if (den == 0) throw SolveError(std::string(context) + ": division by zero");
    Bigint q = num / den;
    if (q * den != num) throw SolveError(std::string(context) + ": inexact division");
    return q;
}

inline Bigint floor_rational(const Rational& x) {
    Bigint num = boost::multiprecision::numerator(x);
    Bigint den = boost::multiprecision::denominator(x);  // always > 0
    Bigint q = num / den;
    if (num < 0 && q * den != num) --q;
    return q;
}

inline Bigint ceil_rational(const Rational& x) {
    Bigint num = boost::multiprecision::numerator(x);
    Bigint den = boost::multiprecision::denominator(x);
    Bigint q = num / den;
    if (num > 0 && q * den != num) ++q;
    return q;
}

inline std::string to_decimal(const Bigint& x) { return x.str(); }

}  // namespace surjcount
