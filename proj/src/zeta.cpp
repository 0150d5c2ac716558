#include <lyndon/zeta.hpp>

#include <lyndon/errors.hpp>
#include <lyndon/special_numbers.hpp>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace lyndon {

namespace {

using cplx = std::complex<double>;

constexpr long long max_series_terms = 600'000'000;
constexpr double eps = std::numeric_limits<double>::epsilon();

void validate_tol(double tol) {
    if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
}

// (base)^e for base > 0 with a fast path for small integer real exponents.
cplx pow_positive(double base, cplx e) {
    if (e.imag() == 0.0) {
        const double re = e.real();
        const double ri = std::nearbyint(re);
        if (re == ri && std::abs(ri) <= 8) {
            double p = 1.0;
            for (int i = 0; i < static_cast<int>(std::abs(ri)); ++i) p *= base;
            return ri < 0 ? cplx(1.0 / p) : cplx(p);
        }
        return cplx(std::pow(base, re));
    }
    return std::exp(e * std::log(base));
}

// Kahan-compensated complex accumulator with a running sum of magnitudes.
struct Accumulator {
    cplx sum{0.0, 0.0};
    cplx comp{0.0, 0.0};
    double abs_sum = 0.0;

    void add(cplx term) {
        abs_sum += std::abs(term);
        const cplx y = term - comp;
        const cplx t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }

    // allowance for term rounding plus compensated-summation residue
    double fp_slack() const { return 8.0 * eps * abs_sum; }
};

// Successive-ratio control for sum q^n (n+shift)^{-s}: past `start`, the
// term ratio magnitudes stay <= r < 1, so the tail after term n is bounded
// by |t_n| r / (1 - r).
struct TailControl {
    double r = 0.0;
    long long start = 0;
};

TailControl ratio_tail_control(double q_abs, double sigma, double shift) {
    TailControl tc;
    if (q_abs == 0.0) return tc; // single surviving term
    if (sigma >= 0.0) {
        tc.r = q_abs; // (n+1+shift)^{-sigma} only shrinks the ratio
        return tc;
    }
    tc.r = 0.5 * (1.0 + q_abs);
    // (1 + 1/(n+shift))^{-sigma} <= exp(-sigma/(n+shift)) <= r/q once
    // n + shift >= -sigma / log(r/q)
    const double needed = -sigma / std::log(tc.r / q_abs);
    tc.start = needed > shift ? static_cast<long long>(std::ceil(needed - shift)) + 1 : 0;
    return tc;
}

// Core loop shared by the Lerch series and the direct unified-zeta sum.
// next_term(n) must return the exact n-th term of the series.
template <typename TermFn>
NumericResult ratio_mode_sum(TermFn next_term, const TailControl& tc, double tol) {
    Accumulator acc;
    const double tail_factor = tc.r < 1.0 ? tc.r / (1.0 - tc.r) : 0.0;
    for (long long n = 0;; ++n) {
        if (n > max_series_terms)
            throw convergence_error("series sum: tolerance not reached within term cap");
        const cplx term = next_term(n);
        acc.add(term);
        if (n < tc.start) continue;
        const double tail = std::abs(term) * tail_factor;
        const double bound = tail + acc.fp_slack();
        if (bound <= tol) return {acc.sum, bound, n + 1};
    }
}

NumericResult absolute_mode_sum(cplx z, cplx s, double a, double tol) {
    // |z| = 1, Re(s) > 1: absolutely convergent, integral tail bound
    const double sigma = s.real();
    const double need = std::pow((sigma - 1.0) * 0.999 * tol, -1.0 / (sigma - 1.0)) - a;
    if (!(need < static_cast<double>(max_series_terms)))
        throw convergence_error("hurwitz sum: tolerance needs more than " +
                                std::to_string(max_series_terms) + " terms");
    long long last = need > 0 ? static_cast<long long>(std::ceil(need)) : 0;
    Accumulator acc;
    const bool unit_z = z == cplx(1.0, 0.0);
    cplx zp(1.0, 0.0);
    for (long long n = 0; n <= last; ++n) {
        cplx term = pow_positive(n + a, -s);
        if (!unit_z) {
            term *= zp;
            zp *= z;
        }
        acc.add(term);
    }
    auto tail_after = [&](long long n) {
        return std::pow(static_cast<double>(n) + a, 1.0 - sigma) / (sigma - 1.0);
    };
    // the float slack is only known after summing; extend if it ate the margin
    double error = tail_after(last) + acc.fp_slack();
    while (error > tol) {
        if (++last > max_series_terms)
            throw convergence_error("hurwitz sum: tolerance not reached within term cap");
        cplx term = pow_positive(last + a, -s);
        if (!unit_z) {
            term *= zp;
            zp *= z;
        }
        acc.add(term);
        error = tail_after(last) + acc.fp_slack();
    }
    return {acc.sum, error, last + 1};
}

} // namespace

NumericResult phi_lerch(cplx z, cplx s, double a, double tol) {
    validate_tol(tol);
    if (!(a > 0)) throw std::invalid_argument("phi_lerch: a must be positive");
    const double zabs = std::abs(z);
    if (zabs < 1.0) {
        const TailControl tc = ratio_tail_control(zabs, s.real(), a);
        cplx zp(1.0, 0.0);
        auto term = [&](long long n) {
            const cplx t = zp * pow_positive(n + a, -s);
            zp *= z;
            return t;
        };
        return ratio_mode_sum(term, tc, tol);
    }
    if (zabs == 1.0 && s.real() > 1.0) return absolute_mode_sum(z, s, a, tol);
    throw divergence_error("phi_lerch: need |z| < 1, or |z| = 1 with Re(s) > 1");
}

NumericResult hurwitz_zeta(cplx s, double a, double tol) {
    validate_tol(tol);
    if (!(a > 0)) throw std::invalid_argument("hurwitz_zeta: a must be positive");
    if (!(s.real() > 1.0)) throw divergence_error("hurwitz_zeta: requires Re(s) > 1");
    return absolute_mode_sum(cplx(1.0, 0.0), s, a, tol);
}

NumericResult riemann_zeta(cplx s, double tol) { return hurwitz_zeta(s, 1.0, tol); }

namespace {

// (-1/2)^{k-1} computed exactly in binary
cplx unified_prefactor(unsigned k) {
    const int e = static_cast<int>(k) - 1;
    const double mag = std::ldexp(1.0, -e);
    return cplx(e % 2 != 0 ? -mag : mag, 0.0);
}

void validate_unified(const ZetaParams& p) {
    if (!(p.x > 0)) throw std::invalid_argument("unified_zeta: x must be positive");
    if (!(p.a > 0)) throw std::invalid_argument("unified_zeta: a must be positive");
    if (!(p.b > 0)) throw std::invalid_argument("unified_zeta: b must be positive");
}

} // namespace

NumericResult unified_zeta(const ZetaParams& p, double tol) {
    validate_tol(tol);
    validate_unified(p);
    const cplx beta_b = std::pow(p.beta, cplx(p.b, 0.0));
    const double ab = std::pow(p.a, p.b);
    if (!(std::abs(beta_b) < ab))
        throw divergence_error("unified_zeta: series needs |beta^b / a^b| < 1");
    const cplx prefactor = unified_prefactor(p.k);
    const TailControl tc = ratio_tail_control(std::abs(beta_b) / ab, p.s.real(), p.x);
    cplx beta_pow(1.0, 0.0); // beta^{b n}
    double a_pow = ab;       // a^{b (n+1)}
    auto term = [&](long long n) {
        const cplx t = prefactor * beta_pow / (a_pow * pow_positive(n + p.x, p.s));
        beta_pow *= beta_b;
        a_pow *= ab;
        return t;
    };
    return ratio_mode_sum(term, tc, tol);
}

std::pair<NumericResult, NumericResult> unified_zeta_paths(const ZetaParams& p, double tol) {
    NumericResult direct = unified_zeta(p, tol);
    validate_tol(tol);
    const cplx beta_b = std::pow(p.beta, cplx(p.b, 0.0));
    const double ab = std::pow(p.a, p.b);
    const cplx scale = unified_prefactor(p.k) / ab;
    const NumericResult phi = phi_lerch(beta_b / ab, p.s, p.x, tol / std::abs(scale));
    NumericResult via_phi{scale * phi.value,
                          std::abs(scale) * phi.error_bound + 4.0 * eps * std::abs(scale * phi.value),
                          phi.terms_used};
    return {direct, via_phi};
}

ZetaSpecialValue zeta_special_value(unsigned n, const BigRational& x, unsigned k,
                                    const BigRational& a, unsigned b, const BigRational& beta,
                                    double tol) {
    if (n == 0) throw std::invalid_argument("zeta_special_value: n must be >= 1");
    ZetaParams params;
    params.beta = cplx(to_double(beta), 0.0);
    params.s = cplx(1.0 - static_cast<double>(n), 0.0);
    params.x = to_double(x);
    params.k = k;
    params.a = to_double(a);
    params.b = static_cast<double>(b);
    NumericResult series = unified_zeta(params, tol);

    const UnifiedY y = unified_y(n + k - 1, x, k, a, b);
    const BigRational y_at_beta = y.value.eval(beta);
    BigRational factor = make_rational(factorial(n - 1), factorial(n + k - 1));
    if (k % 2 != 0) factor = -factor;
    return {series, factor * y_at_beta};
}

} // namespace lyndon
