#pragma once

/**
 * @file power_series.hpp
 * @brief Truncated formal power series over a field.
 *
 * A series of order N stores exactly the coefficients of t^0 .. t^{N-1};
 * arithmetic never reads or fabricates anything beyond the stored order.
 * Orders are always explicit: every identity in this project needs only
 * finitely many coefficients.
 */

#include <lyndon/field.hpp>
#include <lyndon/rational_function.hpp>

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace lyndon {

template <field F>
class PowerSeries {
public:
    /// Zero series of the given order.
    explicit PowerSeries(std::size_t order) : coeffs_(order, F(0)) {}

    explicit PowerSeries(std::vector<F> coeffs) : coeffs_(std::move(coeffs)) {}

    static PowerSeries constant(const F& c, std::size_t order) {
        PowerSeries s(order);
        if (order > 0) s.coeffs_[0] = c;
        return s;
    }

    static PowerSeries from_polynomial(const Polynomial<F>& p, std::size_t order) {
        PowerSeries s(order);
        for (std::size_t i = 0; i < order && i < p.coefficients().size(); ++i)
            s.coeffs_[i] = p.coefficients()[i];
        return s;
    }

    std::size_t order() const { return coeffs_.size(); }

    const F& coeff(std::size_t i) const {
        if (i >= coeffs_.size()) throw std::out_of_range("PowerSeries::coeff beyond order");
        return coeffs_[i];
    }

    const std::vector<F>& coefficients() const { return coeffs_; }

    bool operator==(const PowerSeries&) const = default;

    PowerSeries truncate(std::size_t order) const {
        std::vector<F> v(coeffs_.begin(), coeffs_.begin() + std::min(order, coeffs_.size()));
        v.resize(order, F(0));
        return PowerSeries(std::move(v));
    }

    PowerSeries operator-() const {
        std::vector<F> v;
        v.reserve(coeffs_.size());
        for (const F& c : coeffs_) v.push_back(-c);
        return PowerSeries(std::move(v));
    }

    friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
        const std::size_t n = std::min(a.order(), b.order());
        std::vector<F> v(n, F(0));
        for (std::size_t i = 0; i < n; ++i) v[i] = a.coeffs_[i] + b.coeffs_[i];
        return PowerSeries(std::move(v));
    }

    friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) { return a + (-b); }

    /// Product truncated to the smaller operand order.
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
        const std::size_t n = std::min(a.order(), b.order());
        std::vector<F> v(n, F(0));
        for (std::size_t i = 0; i < n; ++i) {
            if (lyndon::is_zero(a.coeffs_[i])) continue;
            for (std::size_t j = 0; i + j < n; ++j)
                v[i + j] = v[i + j] + a.coeffs_[i] * b.coeffs_[j];
        }
        return PowerSeries(std::move(v));
    }

    friend PowerSeries operator*(const F& s, const PowerSeries& a) {
        std::vector<F> v;
        v.reserve(a.coeffs_.size());
        for (const F& c : a.coeffs_) v.push_back(s * c);
        return PowerSeries(std::move(v));
    }

    /// Multiplication by t^k within the fixed order; top coefficients fall off.
    PowerSeries shift_up(std::size_t k) const {
        std::vector<F> v(coeffs_.size(), F(0));
        for (std::size_t i = k; i < coeffs_.size(); ++i) v[i] = coeffs_[i - k];
        return PowerSeries(std::move(v));
    }

    /// Multiplicative inverse; requires an invertible constant term.
    PowerSeries inverse() const {
        if (coeffs_.empty() || lyndon::is_zero(coeffs_[0]))
            throw std::domain_error("PowerSeries::inverse: constant term not invertible");
        const F c0_inv = F(1) / coeffs_[0];
        std::vector<F> v(coeffs_.size(), F(0));
        v[0] = c0_inv;
        for (std::size_t n = 1; n < coeffs_.size(); ++n) {
            F acc(0);
            for (std::size_t i = 1; i <= n; ++i) acc = acc + coeffs_[i] * v[n - i];
            v[n] = -(c0_inv * acc);
        }
        return PowerSeries(std::move(v));
    }

private:
    std::vector<F> coeffs_;
};

/// Series of e^{tx}: coefficient of t^i is x^i / i!.
template <field F>
PowerSeries<F> exponential_series(const F& x, std::size_t order) {
    std::vector<F> v(order, F(0));
    if (order > 0) v[0] = F(1);
    for (std::size_t i = 1; i < order; ++i)
        v[i] = v[i - 1] * x / F(static_cast<int>(i));
    return PowerSeries<F>(std::move(v));
}

template <field F>
PowerSeries<F> operator/(const PowerSeries<F>& a, const PowerSeries<F>& b) {
    return a * b.inverse();
}

/// Taylor expansion of f at 0; the denominator must not vanish there.
template <field F>
PowerSeries<F> taylor_series(const RationalFunction<F>& f, std::size_t order) {
    if (is_zero(f.den().coeff(0)))
        throw pole_error("taylor_series: expansion point is a pole");
    if (order == 0) return PowerSeries<F>(std::size_t{0});
    const auto num = PowerSeries<F>::from_polynomial(f.num(), order);
    const auto den = PowerSeries<F>::from_polynomial(f.den(), order);
    return num * den.inverse();
}

} // namespace lyndon
