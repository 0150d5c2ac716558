#include <lyndon/number_theory.hpp>

#include <algorithm>
#include <stdexcept>

namespace lyndon {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) r = mul_mod(r, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return r;
}

bool strong_probable_prime(std::uint64_t n, std::uint64_t a) {
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (unsigned i = 1; i < s; ++i) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

// increments of the 2-3-5 wheel starting from 7
constexpr unsigned kWheel[8] = {4, 2, 4, 2, 4, 6, 2, 6};

} // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    // witness set deterministic for all n < 2^64
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull})
        if (!strong_probable_prime(n, a)) return false;
    return true;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("divisors: n must be positive");
    std::vector<std::uint64_t> low, high;
    for (std::uint64_t i = 1; i <= n / i; ++i) {
        if (n % i != 0) continue;
        low.push_back(i);
        if (i != n / i) high.push_back(n / i);
    }
    low.insert(low.end(), high.rbegin(), high.rend());
    return low;
}

Factorization factorize(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("factorize: n must be positive");
    Factorization f;
    auto strip = [&](std::uint64_t p) {
        if (n % p != 0) return;
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        f.prime_powers.push_back({p, e});
    };
    strip(2);
    strip(3);
    strip(5);
    std::uint64_t c = 7;
    unsigned w = 0;
    while (c <= n / c) {
        if (n > 1 && is_prime(n)) break; // remaining cofactor is prime
        strip(c);
        c += kWheel[w];
        w = (w + 1) & 7;
    }
    if (n > 1) f.prime_powers.push_back({n, 1});
    return f;
}

std::uint64_t Factorization::value() const {
    std::uint64_t v = 1;
    for (const auto& pp : prime_powers)
        for (unsigned i = 0; i < pp.exponent; ++i) v *= pp.prime;
    return v;
}

std::vector<std::uint64_t> Factorization::divisor_list() const {
    std::vector<std::uint64_t> out{1};
    for (const auto& pp : prime_powers) {
        const std::size_t base = out.size();
        std::uint64_t q = 1;
        for (unsigned e = 1; e <= pp.exponent; ++e) {
            q *= pp.prime;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * q);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

int mobius(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("mobius: n must be positive");
    const Factorization f = factorize(n);
    for (const auto& pp : f.prime_powers)
        if (pp.exponent >= 2) return 0;
    return f.prime_powers.size() % 2 == 0 ? 1 : -1;
}

BigInt int_pow(std::uint64_t base, std::uint64_t exp) {
    if (base == 0 && exp == 0) throw std::domain_error("int_pow: 0^0 is undefined here");
    BigInt r = 1, b = base;
    while (exp > 0) {
        if (exp & 1) r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

} // namespace lyndon
