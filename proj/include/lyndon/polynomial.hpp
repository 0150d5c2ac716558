#pragma once

/**
 * @file polynomial.hpp
 * @brief Dense univariate polynomials over a field.
 *
 * Coefficients are stored in ascending degree with trailing zeros trimmed,
 * so the zero polynomial is the empty sequence and degree() is -1 for it.
 * All operations return new values; nothing mutates in place.
 */

#include <lyndon/field.hpp>

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace lyndon {

template <field F>
class Polynomial {
public:
    Polynomial() = default;

    explicit Polynomial(std::vector<F> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    Polynomial(std::initializer_list<F> coeffs) : coeffs_(coeffs) { trim(); }

    /// c * x^k
    static Polynomial monomial(const F& c, std::size_t k) {
        if (is_zero(c)) return Polynomial{};
        std::vector<F> v(k + 1, F(0));
        v[k] = c;
        return Polynomial(std::move(v));
    }

    static Polynomial constant(const F& c) { return monomial(c, 0); }
    static Polynomial variable() { return monomial(F(1), 1); }

    bool is_zero() const { return coeffs_.empty(); }

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    const std::vector<F>& coefficients() const { return coeffs_; }

    /// Coefficient of x^i, zero beyond the stored degree.
    F coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : F(0); }

    const F& leading() const {
        if (is_zero()) throw std::domain_error("Polynomial::leading: zero polynomial");
        return coeffs_.back();
    }

    bool operator==(const Polynomial&) const = default;

    Polynomial operator-() const {
        std::vector<F> v;
        v.reserve(coeffs_.size());
        for (const F& c : coeffs_) v.push_back(-c);
        return Polynomial(std::move(v));
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<F> v(std::max(a.coeffs_.size(), b.coeffs_.size()), F(0));
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
        return Polynomial(std::move(v));
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial{};
        std::vector<F> v(a.coeffs_.size() + b.coeffs_.size() - 1, F(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                v[i + j] = v[i + j] + a.coeffs_[i] * b.coeffs_[j];
        return Polynomial(std::move(v));
    }

    friend Polynomial operator*(const F& s, const Polynomial& p) {
        std::vector<F> v;
        v.reserve(p.coeffs_.size());
        for (const F& c : p.coeffs_) v.push_back(s * c);
        return Polynomial(std::move(v));
    }

    friend Polynomial operator*(const Polynomial& p, const F& s) { return s * p; }

    /// Quotient and remainder with deg(rem) < deg(divisor).
    friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
        if (b.is_zero()) throw std::domain_error("Polynomial divmod: division by zero");
        if (a.degree() < b.degree()) return {Polynomial{}, a};
        std::vector<F> rem = a.coeffs_;
        std::vector<F> quot(a.coeffs_.size() - b.coeffs_.size() + 1, F(0));
        const F inv_lead = F(1) / b.leading();
        for (int i = static_cast<int>(quot.size()) - 1; i >= 0; --i) {
            F q = rem[i + b.degree()] * inv_lead;
            quot[i] = q;
            if (lyndon::is_zero(q)) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                rem[i + j] = rem[i + j] - q * b.coeffs_[j];
        }
        return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
    }

    friend Polynomial operator/(const Polynomial& a, const Polynomial& b) {
        return divmod(a, b).first;
    }

    friend Polynomial operator%(const Polynomial& a, const Polynomial& b) {
        return divmod(a, b).second;
    }

    F eval(const F& x) const {
        F r(0);
        for (std::size_t i = coeffs_.size(); i-- > 0;) r = r * x + coeffs_[i];
        return r;
    }

    Polynomial derivative() const {
        if (coeffs_.size() <= 1) return Polynomial{};
        std::vector<F> v(coeffs_.size() - 1, F(0));
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            v[i - 1] = F(static_cast<int>(i)) * coeffs_[i];
        return Polynomial(std::move(v));
    }

    Polynomial monic() const {
        if (is_zero()) return *this;
        return (F(1) / leading()) * (*this);
    }

    /// Coefficients reversed: x^deg * p(1/x).
    Polynomial reversed() const {
        std::vector<F> v(coeffs_.rbegin(), coeffs_.rend());
        return Polynomial(std::move(v));
    }

private:
    void trim() {
        while (!coeffs_.empty() && lyndon::is_zero(coeffs_.back())) coeffs_.pop_back();
    }

    std::vector<F> coeffs_;
};

/// Monic gcd by the Euclidean algorithm; exact arithmetic, no tolerances.
template <field F>
Polynomial<F> poly_gcd(Polynomial<F> a, Polynomial<F> b) {
    while (!b.is_zero()) {
        Polynomial<F> r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

template <field F>
Polynomial<F> poly_pow(const Polynomial<F>& p, unsigned e) {
    Polynomial<F> r = Polynomial<F>::constant(F(1));
    Polynomial<F> base = p;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

} // namespace lyndon
