#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace msc {

// All arithmetic in this project is exact; no floating point anywhere.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational rational_pow(const Rational& base, long long exp) {
    if (exp == 0)
        return Rational(1);
    if (exp < 0) {
        if (base == 0)
            throw std::domain_error("rational_pow: zero base with negative exponent");
        return Rational(1) / rational_pow(base, -exp);
    }
    Rational acc(1), b = base;
    long long e = exp;
    while (e > 0) {
        if (e & 1)
            acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

inline Int int_pow(const Int& base, unsigned long long exp) {
    Int acc(1), b = base;
    while (exp > 0) {
        if (exp & 1)
            acc *= b;
        b *= b;
        exp >>= 1;
    }
    return acc;
}

inline bool is_prime(long long n) {
    if (n < 2)
        return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

// q = p^k for a prime p, k >= 1.
inline bool is_prime_power(long long q) {
    if (q < 2)
        return false;
    long long p = q;
    for (long long d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    while (q % p == 0)
        q /= p;
    return q == 1;
}

// Pretty form "a/b", or just "a" for integers.
inline std::string to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1)
        s += "/" + denominator(r).str();
    return s;
}

} // namespace msc
