/**
 * @file rational.hpp
 * @brief Exact rational arithmetic helpers used for broadcast rates.
 */

#ifndef TSUIC_RATIONAL_HPP
#define TSUIC_RATIONAL_HPP

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace tsuic {

/// Exact rational number; all rates are represented this way (never floats).
using Rational = boost::rational<long long>;

/// Smallest integer p with 2^p >= x, for x >= 1. ceil_log2(1) == 0.
inline int ceil_log2(long long x) {
    int p = 0;
    long long v = 1;
    while (v < x) {
        v <<= 1;
        ++p;
    }
    return p;
}

/// Ceiling of a rational, correct for negative values as well.
inline long long ceil_rational(const Rational& r) {
    long long q = r.numerator() / r.denominator();
    if (r.numerator() % r.denominator() != 0 && r.numerator() > 0) ++q;
    return q;
}

/// Renders "a/b", or just "a" when the denominator is one.
inline std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

} // namespace tsuic

#endif // TSUIC_RATIONAL_HPP
