#include <lyndon/special_numbers.hpp>

#include <lyndon/power_series.hpp>

#include <mutex>
#include <stdexcept>
#include <vector>

namespace lyndon {

namespace {

using RatSeries = PowerSeries<BigRational>;
using FuncSeries = PowerSeries<RatFunc>;

// Memoized table growth under a shared lock. Recomputing would satisfy the
// contracts too; the identity suite just hits the same prefixes repeatedly.
template <typename T, typename Grow>
std::vector<T> cached_prefix(std::vector<T>& table, std::mutex& mu, unsigned n, Grow grow) {
    std::lock_guard<std::mutex> lock(mu);
    if (table.size() <= n) table = grow(n);
    return {table.begin(), table.begin() + n + 1};
}

// n! [t^n] coefficients of t / (e^t - 1) = 1 / sum_i t^i/(i+1)!
std::vector<BigRational> bernoulli_table(unsigned n) {
    std::vector<BigRational> denom(n + 1);
    BigInt fact = 1;
    for (unsigned i = 0; i <= n; ++i) {
        fact *= i + 1;
        denom[i] = make_rational(1, fact);
    }
    const RatSeries inv = RatSeries(std::move(denom)).inverse();
    std::vector<BigRational> out(n + 1);
    BigInt nf = 1;
    for (unsigned i = 0; i <= n; ++i) {
        if (i > 0) nf *= i;
        out[i] = inv.coeff(i) * BigRational(nf);
    }
    return out;
}

// n! [t^n] of 2 / (e^t + 1)
std::vector<BigRational> euler_table(unsigned n) {
    std::vector<BigRational> denom(n + 1);
    BigInt fact = 1;
    denom[0] = 2;
    for (unsigned i = 1; i <= n; ++i) {
        fact *= i;
        denom[i] = make_rational(1, fact);
    }
    const RatSeries inv = RatSeries(std::move(denom)).inverse();
    std::vector<BigRational> out(n + 1);
    BigInt nf = 1;
    for (unsigned i = 0; i <= n; ++i) {
        if (i > 0) nf *= i;
        out[i] = BigRational(2) * inv.coeff(i) * BigRational(nf);
    }
    return out;
}

// n! [t^n] of (1 - z) / (e^t - z) over Q(z)
std::vector<RatFunc> frobenius_table(unsigned n) {
    const RatFunc z = RatFunc::variable();
    const RatFunc one_minus_z = RatFunc(1) - z;
    std::vector<RatFunc> denom(n + 1);
    denom[0] = one_minus_z;
    BigInt fact = 1;
    for (unsigned i = 1; i <= n; ++i) {
        fact *= i;
        denom[i] = RatFunc::constant(make_rational(1, fact));
    }
    const FuncSeries series = one_minus_z * FuncSeries(std::move(denom)).inverse();
    std::vector<RatFunc> out(n + 1);
    BigInt nf = 1;
    for (unsigned i = 0; i <= n; ++i) {
        if (i > 0) nf *= i;
        out[i] = RatFunc::constant(BigRational(nf)) * series.coeff(i);
    }
    return out;
}

// n! [t^n] of t / (z e^t - 1) over Q(z); entry 0 is the zero function
std::vector<RatFunc> apostol_table(unsigned n) {
    const RatFunc z = RatFunc::variable();
    std::vector<RatFunc> denom(n + 1);
    denom[0] = z - RatFunc(1);
    BigInt fact = 1;
    for (unsigned i = 1; i <= n; ++i) {
        fact *= i;
        denom[i] = RatFunc::constant(make_rational(1, fact)) * z;
    }
    const FuncSeries inv = FuncSeries(std::move(denom)).inverse();
    std::vector<RatFunc> out(n + 1); // out[0] stays zero: numerator t kills t^0
    BigInt nf = 1;
    for (unsigned i = 1; i <= n; ++i) {
        nf *= i;
        out[i] = RatFunc::constant(BigRational(nf)) * inv.coeff(i - 1);
    }
    return out;
}

std::vector<BigRational> g_bernoulli;
std::vector<BigRational> g_euler;
std::vector<RatFunc> g_frobenius;
std::vector<RatFunc> g_apostol;
std::mutex g_bernoulli_mu, g_euler_mu, g_frobenius_mu, g_apostol_mu;

} // namespace

BigRational bernoulli_number(unsigned n) {
    return cached_prefix(g_bernoulli, g_bernoulli_mu, n, bernoulli_table)[n];
}

RatPoly bernoulli_poly(unsigned n) {
    const auto numbers = cached_prefix(g_bernoulli, g_bernoulli_mu, n, bernoulli_table);
    std::vector<BigRational> coeffs(n + 1);
    for (unsigned j = 0; j <= n; ++j)
        coeffs[n - j] = BigRational(binomial(n, j)) * numbers[j];
    return RatPoly(std::move(coeffs));
}

BigRational euler_number(unsigned n) {
    return cached_prefix(g_euler, g_euler_mu, n, euler_table)[n];
}

FrobeniusEuler frobenius_euler(unsigned n) {
    return {n, cached_prefix(g_frobenius, g_frobenius_mu, n, frobenius_table)[n]};
}

ApostolBernoulli apostol_bernoulli_number(unsigned n) {
    return {n, cached_prefix(g_apostol, g_apostol_mu, n, apostol_table)[n]};
}

RatFunc apostol_bernoulli_poly(unsigned n, const BigRational& x) {
    const RatFunc z = RatFunc::variable();
    std::vector<RatFunc> denom(n + 2);
    denom[0] = z - RatFunc(1);
    BigInt fact = 1;
    for (unsigned i = 1; i <= n + 1; ++i) {
        fact *= i;
        denom[i] = RatFunc::constant(make_rational(1, fact)) * z;
    }
    const FuncSeries numer =
        exponential_series(RatFunc::constant(x), n + 2).shift_up(1); // t e^{tx}
    const FuncSeries series = numer * FuncSeries(std::move(denom)).inverse();
    return RatFunc::constant(BigRational(factorial(n))) * series.coeff(n);
}

Polynomial<RatFunc> apostol_bernoulli_poly_symbolic(unsigned n) {
    std::vector<RatFunc> coeffs(n + 1);
    for (unsigned j = 0; j <= n; ++j) {
        const auto bj = apostol_bernoulli_number(j).value;
        coeffs[n - j] = RatFunc::constant(BigRational(binomial(n, j))) * bj;
    }
    return Polynomial<RatFunc>(std::move(coeffs));
}

UnifiedY unified_y(unsigned n, const BigRational& x, unsigned k, const BigRational& a,
                   unsigned b) {
    if (b == 0) throw std::invalid_argument("unified_y: b must be a positive integer");
    if (a <= 0) throw std::invalid_argument("unified_y: a must be positive");
    const std::size_t order = static_cast<std::size_t>(n) + 1;
    const RatFunc beta_b = RatFunc(Polynomial<BigRational>::monomial(1, b)); // beta^b
    const RatFunc a_b = RatFunc::constant(rat_pow(a, b));

    std::vector<RatFunc> denom(order); // beta^b e^t - a^b
    BigInt fact = 1;
    denom[0] = beta_b - a_b;
    for (std::size_t i = 1; i < order; ++i) {
        fact *= i;
        denom[i] = RatFunc::constant(make_rational(1, fact)) * beta_b;
    }

    const BigRational prefactor = rat_pow(BigRational(2), 1 - static_cast<long long>(k));
    FuncSeries numer = exponential_series(RatFunc::constant(x), order);
    numer = (RatFunc::constant(prefactor) * numer).shift_up(k);

    const FuncSeries series = numer * FuncSeries(std::move(denom)).inverse();
    return {n, x, k, a, b, RatFunc::constant(BigRational(factorial(n))) * series.coeff(n)};
}

RatFunc apostol_via_frobenius(unsigned n) {
    if (n == 0) throw std::invalid_argument("apostol_via_frobenius: n must be >= 1");
    const RatFunc h = frobenius_euler(n - 1).value.reciprocal_substitution(); // H_{n-1}(1/z)
    const RatPoly z_minus_1{BigRational(-1), BigRational(1)};
    return RatFunc(RatPoly::constant(BigRational(n)), z_minus_1) * h;
}

} // namespace lyndon
