#pragma once

#include <concepts>

namespace lyndon {

/**
 * Coefficient field for the generic algebra layer.
 *
 * Needs the four arithmetic operations, negation, equality, and
 * construction of small integer constants (0, 1, i! factors, ...).
 * Instantiated with BigRational and with RationalFunction<BigRational>,
 * the latter giving series arithmetic over a rational-function field.
 */
template <typename F>
concept field = std::regular<F> && requires(F a, F b, int i) {
    { a + b } -> std::convertible_to<F>;
    { a - b } -> std::convertible_to<F>;
    { a * b } -> std::convertible_to<F>;
    { a / b } -> std::convertible_to<F>;
    { -a } -> std::convertible_to<F>;
    F(i);
};

template <field F>
bool is_zero(const F& a) {
    return a == F(0);
}

template <field F>
F field_pow(const F& a, unsigned e) {
    F r(1), base = a;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

} // namespace lyndon
