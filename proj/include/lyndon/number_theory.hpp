#pragma once

/**
 * @file number_theory.hpp
 * @brief Integer building blocks: divisors, Moebius function, primality,
 *        factorization, exact big-integer powers.
 *
 * Primality is deterministic for all 64-bit inputs (fixed Miller-Rabin
 * witness set, proven complete below 2^64). Factorization is trial
 * division with a 2-3-5 wheel; inputs are desk-scale.
 */

#include <lyndon/rational.hpp>

#include <cstdint>
#include <vector>

namespace lyndon {

struct PrimePower {
    std::uint64_t prime;
    unsigned exponent;
    bool operator==(const PrimePower&) const = default;
};

/// Prime-power decomposition, primes strictly increasing.
struct Factorization {
    std::vector<PrimePower> prime_powers;

    std::uint64_t value() const;
    std::vector<std::uint64_t> divisor_list() const;
    bool operator==(const Factorization&) const = default;
};

/// All divisors of n in increasing order; n >= 1.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// mu(1) = 1; (-1)^k on squarefree products of k primes; 0 otherwise.
int mobius(std::uint64_t n);

bool is_prime(std::uint64_t n);

Factorization factorize(std::uint64_t n);

/// Exact k^d; 0^0 is rejected so the convention never hides a caller bug.
BigInt int_pow(std::uint64_t base, std::uint64_t exp);

} // namespace lyndon
