#pragma once

/**
 * @file rational.hpp
 * @brief Arbitrary-precision integers and exact rationals.
 *
 * Thin layer over boost::multiprecision. BigRational is always kept in
 * canonical form by the backend: gcd(|num|, den) = 1, den >= 1, zero is 0/1.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace lyndon {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// num/den as a canonical rational; den may be negative or share factors.
inline BigRational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("make_rational: zero denominator");
    // two-arg cpp_rational ctor rejects negative denominators; division normalizes
    return BigRational(num) / BigRational(den);
}

inline BigInt factorial(unsigned n) {
    BigInt f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

inline BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (unsigned i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1; // exact at every step
    }
    return r;
}

/// q^e for any integer exponent; q != 0 required when e < 0.
inline BigRational rat_pow(const BigRational& q, long long e) {
    if (e < 0) {
        if (q == 0) throw std::domain_error("rat_pow: negative power of zero");
        return 1 / rat_pow(q, -e);
    }
    BigRational r = 1, base = q;
    unsigned long long n = static_cast<unsigned long long>(e);
    while (n > 0) {
        if (n & 1) r *= base;
        base *= base;
        n >>= 1;
    }
    return r;
}

/// "p/q", or just "p" when q = 1.
inline std::string rational_to_string(const BigRational& q) {
    const BigInt num = numerator(q), den = denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

/// Accepts "p" or "p/q"; q defaults to 1.
inline BigRational parse_rational(const std::string& s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return BigRational(BigInt(s));
        return make_rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("parse_rational: malformed rational '" + s + "'");
    }
}

inline double to_double(const BigRational& q) { return q.convert_to<double>(); }

} // namespace lyndon
