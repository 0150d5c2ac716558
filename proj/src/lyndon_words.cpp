#include <lyndon/lyndon_words.hpp>

#include <lyndon/errors.hpp>
#include <lyndon/number_theory.hpp>
#include <lyndon/special_numbers.hpp>

#include <stdexcept>

namespace lyndon {

std::string Word::str() const {
    if (alphabet_size > 10)
        throw std::logic_error("Word::str: digit strings only defined for k <= 10");
    std::string s;
    s.reserve(digits.size());
    for (std::uint32_t d : digits) s.push_back(static_cast<char>('0' + d));
    return s;
}

BigInt witt_count(std::uint64_t k, std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("witt_count: n must be positive");
    BigInt sum = 0;
    for (std::uint64_t d : divisors(n)) {
        const int mu = mobius(n / d);
        if (mu == 0) continue;
        sum += mu * int_pow(k, d);
    }
    const BigInt q = sum / n;
    if (q * n != sum)
        throw std::logic_error("witt_count: divisor sum not divisible by n (arithmetic bug)");
    return q;
}

BigInt prime_power_count(std::uint64_t k, std::uint64_t p, unsigned m) {
    if (!is_prime(p)) throw std::invalid_argument("prime_power_count: p must be prime");
    if (m == 0) throw std::invalid_argument("prime_power_count: m must be >= 1");
    if (k < 2) throw std::invalid_argument("prime_power_count: k must be >= 2");
    std::uint64_t pm1 = 1; // p^{m-1}
    for (unsigned i = 1; i < m; ++i) pm1 *= p;
    const BigInt num = int_pow(k, pm1) * (int_pow(k, pm1 * (p - 1)) - 1);
    const BigInt den = int_pow(p, m);
    const BigInt q = num / den;
    if (q * den != num)
        throw std::logic_error("prime_power_count: numerator not divisible by p^m (arithmetic bug)");
    return q;
}

bool is_lyndon_word(const Word& w) {
    const std::size_t n = w.digits.size();
    if (n == 0) return false;
    for (std::size_t r = 1; r < n; ++r) {
        // lexicographic w vs its rotation by r; ties mean periodic, not Lyndon
        bool strictly_less = false;
        for (std::size_t i = 0; i < n; ++i) {
            const std::uint32_t a = w.digits[i];
            const std::uint32_t b = w.digits[(i + r) % n];
            if (a != b) {
                strictly_less = a < b;
                break;
            }
        }
        if (!strictly_less) return false;
    }
    return true;
}

std::vector<Word> enumerate_lyndon(std::uint64_t k, std::uint64_t n, std::uint64_t budget) {
    if (k == 0) throw std::invalid_argument("enumerate_lyndon: alphabet must not be empty");
    if (n == 0) throw std::invalid_argument("enumerate_lyndon: n must be positive");
    if (int_pow(k, n) > budget)
        throw budget_error("enumerate_lyndon: k^n exceeds enumeration budget of " +
                           std::to_string(budget));
    std::vector<Word> out;
    Word w{std::vector<std::uint32_t>(n, 0), k};
    // odometer over all k^n strings, most significant digit first = lex order
    while (true) {
        if (is_lyndon_word(w)) out.push_back(w);
        std::size_t i = n;
        while (i > 0) {
            --i;
            if (++w.digits[i] < k) break;
            w.digits[i] = 0;
            if (i == 0) return out;
        }
    }
}

std::vector<BigRational> lyndon_series_coeffs(std::uint64_t p, unsigned max_k) {
    if (!is_prime(p)) throw std::invalid_argument("lyndon_series_coeffs: p must be prime");
    std::vector<BigRational> out;
    out.reserve(max_k + 1);
    for (std::uint64_t k = 0; k <= max_k; ++k) {
        BigInt num = int_pow(k, p) - k;
        const BigInt q = num / p;
        if (q * p != num)
            throw std::logic_error("lyndon_series_coeffs: k^p - k not divisible by p");
        out.emplace_back(q);
    }
    return out;
}

RationalFunction<BigRational> lyndon_gf_closed_form(std::uint64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("lyndon_gf_closed_form: p must be prime");
    const auto b2 = apostol_bernoulli_number(2).value;
    const auto bp1 = apostol_bernoulli_number(static_cast<unsigned>(p) + 1).value;
    const BigRational c2 = make_rational(1, BigInt(2) * p);
    const BigRational cp = make_rational(1, BigInt(p) * (p + 1));
    return c2 * b2 - cp * bp1;
}

BigInt power_from_divisor_sum(std::uint64_t k, std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("power_from_divisor_sum: n must be positive");
    BigInt sum = 0;
    for (std::uint64_t d : divisors(n)) sum += d * witt_count(k, d);
    return sum;
}

} // namespace lyndon
