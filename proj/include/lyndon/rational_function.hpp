#pragma once

/**
 * @file rational_function.hpp
 * @brief Canonical quotients of polynomials over a field.
 *
 * Canonical form: gcd(num, den) = 1 and den monic, zero stored as 0/1.
 * The unique representative makes identity verification a structural
 * equality test, and RationalFunction<BigRational> itself satisfies the
 * field concept, so it can serve as the coefficient field Q(z) or Q(beta).
 */

#include <lyndon/errors.hpp>
#include <lyndon/field.hpp>
#include <lyndon/polynomial.hpp>

#include <cstddef>
#include <utility>

namespace lyndon {

template <field F>
class RationalFunction {
public:
    RationalFunction() : num_{}, den_{Polynomial<F>::constant(F(1))} {}

    RationalFunction(int c) : RationalFunction(Polynomial<F>::constant(F(c))) {}

    RationalFunction(Polynomial<F> num, Polynomial<F> den = Polynomial<F>::constant(F(1)))
        : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
        canonicalize();
    }

    static RationalFunction variable() { return RationalFunction(Polynomial<F>::variable()); }
    static RationalFunction constant(const F& c) {
        return RationalFunction(Polynomial<F>::constant(c));
    }

    const Polynomial<F>& num() const { return num_; }
    const Polynomial<F>& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }

    /// True iff the value lies in the ground field.
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

    bool operator==(const RationalFunction&) const = default;

    RationalFunction operator-() const { return RationalFunction(-num_, den_, already_canonical{}); }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }

    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return a + (-b);
    }

    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }

    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw std::domain_error("RationalFunction: division by zero");
        return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
    }

    friend RationalFunction operator*(const F& s, const RationalFunction& a) {
        return RationalFunction(Polynomial<F>::constant(s) * a.num_, a.den_);
    }

    F eval(const F& x) const {
        const F d = den_.eval(x);
        if (lyndon::is_zero(d)) throw pole_error("RationalFunction::eval: pole at sample point");
        return num_.eval(x) / d;
    }

    RationalFunction derivative() const {
        return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }

    /// f(1/x) rewritten over polynomials in x.
    RationalFunction reciprocal_substitution() const {
        if (is_zero()) return RationalFunction{};
        const int dn = num_.degree(), dd = den_.degree();
        const int m = dn > dd ? dn : dd;
        // x^m f(1/x) splits into reversed coefficient lists padded to degree m
        Polynomial<F> n = num_.reversed() * Polynomial<F>::monomial(F(1), static_cast<std::size_t>(m - dn));
        Polynomial<F> d = den_.reversed() * Polynomial<F>::monomial(F(1), static_cast<std::size_t>(m - dd));
        return RationalFunction(std::move(n), std::move(d));
    }

private:
    struct already_canonical {};
    RationalFunction(Polynomial<F> num, Polynomial<F> den, already_canonical)
        : num_(std::move(num)), den_(std::move(den)) {}

    void canonicalize() {
        if (num_.is_zero()) {
            den_ = Polynomial<F>::constant(F(1));
            return;
        }
        const Polynomial<F> g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
        const F lead = den_.leading();
        if (!(lead == F(1))) {
            const F inv = F(1) / lead;
            num_ = inv * num_;
            den_ = inv * den_;
        }
    }

    Polynomial<F> num_, den_;
};

/// Canonical reduced form of num/den.
template <field F>
RationalFunction<F> rf_reduce(Polynomial<F> num, Polynomial<F> den) {
    return RationalFunction<F>(std::move(num), std::move(den));
}

/// Equality by cross-multiplication, no canonicalization involved.
template <field F>
bool cross_equal(const Polynomial<F>& num_a, const Polynomial<F>& den_a,
                 const Polynomial<F>& num_b, const Polynomial<F>& den_b) {
    return num_a * den_b == num_b * den_a;
}

} // namespace lyndon
