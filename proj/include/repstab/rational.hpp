#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace repstab {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integral(const Rational& r) {
    return boost::multiprecision::denominator(r) == 1;
}

inline Integer to_integer(const Rational& r) {
    return boost::multiprecision::numerator(r) / boost::multiprecision::denominator(r);
}

/// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& r) {
    return r.str();
}

inline std::string to_string(const Integer& z) {
    return z.str();
}

inline Integer factorial(int n) {
    Integer out = 1;
    for (int k = 2; k <= n; ++k) out *= k;
    return out;
}

inline Integer binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Integer out = 1;
    for (int j = 1; j <= k; ++j) {
        out *= n - k + j;
        out /= j;
    }
    return out;
}

inline Integer power(const Integer& base, int exp) {
    Integer out = 1;
    for (int k = 0; k < exp; ++k) out *= base;
    return out;
}

inline Rational power(const Rational& base, int exp) {
    Rational out = 1;
    for (int k = 0; k < exp; ++k) out *= base;
    return out;
}

}  // namespace repstab
