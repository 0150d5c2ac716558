#pragma once

/**
 * @file zeta.hpp
 * @brief Numeric evaluation of the Hurwitz-Lerch Phi, the unified
 *        zeta-type family, and Riemann/Hurwitz specializations.
 *
 * Every result carries a proven truncation bound plus a floating-point
 * summation allowance; the exact-arithmetic modules carry the identity
 * burden, these routines only need honest error bars. No analytic
 * continuation: parameters outside series convergence are rejected.
 */

#include <lyndon/rational.hpp>

#include <complex>
#include <cstdint>
#include <utility>

namespace lyndon {

struct NumericResult {
    std::complex<double> value;
    double error_bound = 0.0; // |value - true sum| <= error_bound
    long long terms_used = 0;
};

inline constexpr double default_zeta_tolerance = 1e-10;

/// Parameters of zeta_beta(s, x; k, a, b). Series mode needs |beta^b| < a^b
/// and x > 0 so no (n + x) factor vanishes.
struct ZetaParams {
    std::complex<double> beta;
    std::complex<double> s;
    double x = 1.0;
    unsigned k = 1;
    double a = 1.0;
    double b = 1.0;
};

/// Phi(z, s, a) = sum_{n>=0} z^n / (n+a)^s for |z| < 1 (any s) or
/// |z| = 1 with Re(s) > 1.
NumericResult phi_lerch(std::complex<double> z, std::complex<double> s, double a,
                        double tol = default_zeta_tolerance);

/// Direct summation of the unified zeta series.
NumericResult unified_zeta(const ZetaParams& params, double tol = default_zeta_tolerance);

/// Direct summation and the Hurwitz-Lerch route (-1/2)^{k-1} a^{-b} Phi;
/// the two must agree within the sum of their error bounds.
std::pair<NumericResult, NumericResult> unified_zeta_paths(const ZetaParams& params,
                                                           double tol = default_zeta_tolerance);

/// zeta(s, a) for Re(s) > 1; partial sum with integral tail bound.
NumericResult hurwitz_zeta(std::complex<double> s, double a,
                           double tol = default_zeta_tolerance);

NumericResult riemann_zeta(std::complex<double> s, double tol = default_zeta_tolerance);

struct ZetaSpecialValue {
    NumericResult series_value;      // zeta_beta(1-n, x; k, a, b) summed numerically
    BigRational formula_value;       // (-1)^k (n-1)!/(n+k-1)! Y_{n+k-1,beta}(x; k, a, b)
};

/// Both sides of the special-value relation at s = 1 - n; the series side
/// must land within its own error bound of the exact side.
ZetaSpecialValue zeta_special_value(unsigned n, const BigRational& x, unsigned k,
                                    const BigRational& a, unsigned b, const BigRational& beta,
                                    double tol = default_zeta_tolerance);

} // namespace lyndon
