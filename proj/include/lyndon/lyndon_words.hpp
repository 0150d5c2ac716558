#pragma once

/**
 * @file lyndon_words.hpp
 * @brief Counting and enumerating k-ary Lyndon words.
 *
 * witt_count is the Moebius divisor-sum count; prime_power_count is the
 * closed form for n = p^m; enumerate_lyndon is the deliberately plain
 * filter-over-all-strings oracle the counting formulas are tested against.
 */

#include <lyndon/rational.hpp>
#include <lyndon/rational_function.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace lyndon {

/// Digit sequence over the alphabet {0 .. k-1}.
struct Word {
    std::vector<std::uint32_t> digits;
    std::uint64_t alphabet_size = 0;

    /// Digit string for alphabets up to 10 symbols.
    std::string str() const;
    bool operator==(const Word&) const = default;
};

struct LyndonCount {
    std::uint64_t k = 0;
    std::uint64_t n = 0;
    BigInt count;
};

inline constexpr std::uint64_t default_enumeration_budget = 10'000'000;

/// L_k(n) = (1/n) sum_{d|n} mu(n/d) k^d; the divisor sum is checked to be
/// divisible by n rather than assumed.
BigInt witt_count(std::uint64_t k, std::uint64_t n);

/// L_k(p^m) = k^{p^{m-1}} (k^{p^{m-1}(p-1)} - 1) / p^m for prime p.
BigInt prime_power_count(std::uint64_t k, std::uint64_t p, unsigned m);

/// True iff w is strictly smaller than each of its nontrivial rotations.
bool is_lyndon_word(const Word& w);

/// All length-n Lyndon words over k symbols in lexicographic order,
/// by filtering all k^n strings; refuses when k^n exceeds the budget.
std::vector<Word> enumerate_lyndon(std::uint64_t k, std::uint64_t n,
                                   std::uint64_t budget = default_enumeration_budget);

/// [L_0(p), ..., L_K(p)] with L_k(p) = (k^p - k)/p, prime p.
std::vector<BigRational> lyndon_series_coeffs(std::uint64_t p, unsigned max_k);

/// Closed form of sum_k L_k(p) t^k as a canonical rational function in t.
RationalFunction<BigRational> lyndon_gf_closed_form(std::uint64_t p);

/// sum_{d|n} d L_k(d); equals k^n by Moebius inversion.
BigInt power_from_divisor_sum(std::uint64_t k, std::uint64_t n);

} // namespace lyndon
