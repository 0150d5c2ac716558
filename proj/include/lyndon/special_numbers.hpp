#pragma once

/**
 * @file special_numbers.hpp
 * @brief Bernoulli, Euler, Frobenius-Euler, Apostol-Bernoulli and unified Y
 *        values, all produced by exact truncated-series expansion of their
 *        defining generating functions.
 *
 * The series expansion over Q, Q(z) or Q(beta) is the definition; closed
 * forms and binomial constructions are cross-checked against it rather
 * than trusted on their own.
 */

#include <lyndon/polynomial.hpp>
#include <lyndon/rational.hpp>
#include <lyndon/rational_function.hpp>

namespace lyndon {

using RatFunc = RationalFunction<BigRational>;
using RatPoly = Polynomial<BigRational>;

/// Coefficient n! [t^n] of t e^{tx} / (e^t - 1) at x = 0.
BigRational bernoulli_number(unsigned n);

/// B_n(x); degree n, leading coefficient 1.
RatPoly bernoulli_poly(unsigned n);

/// Coefficient n! [t^n] of 2 / (e^t + 1).
BigRational euler_number(unsigned n);

struct FrobeniusEuler {
    unsigned index = 0;
    RatFunc value; // H_n(z); finite at z = -1 where it equals E_n
};

/// H_n(z) from (1 - z) / (e^t - z).
FrobeniusEuler frobenius_euler(unsigned n);

struct ApostolBernoulli {
    unsigned index = 0;
    RatFunc value; // pole only at z = 1; denominator (z-1)^n for n >= 1
};

/// Apostol-Bernoulli number B_n(z) from t / (z e^t - 1).
ApostolBernoulli apostol_bernoulli_number(unsigned n);

/// Apostol-Bernoulli polynomial B_n(x, z) at a rational x, as a rational
/// function of z, expanded directly from t e^{tx} / (z e^t - 1).
RatFunc apostol_bernoulli_poly(unsigned n, const BigRational& x);

/// B_n(x, z) as a polynomial in x with coefficients in Q(z), built from the
/// binomial sum over Apostol-Bernoulli numbers.
Polynomial<RatFunc> apostol_bernoulli_poly_symbolic(unsigned n);

struct UnifiedY {
    unsigned n = 0;
    BigRational x;
    unsigned k = 0;
    BigRational a;
    unsigned b = 1;
    RatFunc value; // rational function of beta
};

/// Y_{n,beta}(x; k, a, b) from 2^{1-k} t^k e^{tx} / (beta^b e^t - a^b).
/// b must be a positive integer so beta^b stays polynomial.
UnifiedY unified_y(unsigned n, const BigRational& x, unsigned k, const BigRational& a, unsigned b);

/// n/(z-1) H_{n-1}(1/z), the Frobenius-Euler route to the Apostol-Bernoulli
/// numbers; agrees with apostol_bernoulli_number for every n >= 1.
RatFunc apostol_via_frobenius(unsigned n);

} // namespace lyndon
