#include <lyndon/identities.hpp>

#include <lyndon/format.hpp>
#include <lyndon/lyndon_words.hpp>
#include <lyndon/number_theory.hpp>
#include <lyndon/power_series.hpp>
#include <lyndon/special_numbers.hpp>
#include <lyndon/zeta.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

namespace lyndon {

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::corrected_pass: return "corrected-pass";
    }
    return "unknown";
}

namespace {

const RatPoly kZMinusOne{BigRational(-1), BigRational(1)};

RatFunc over_pole_power(const RatPoly& num, unsigned d) {
    return RatFunc(num, poly_pow(kZMinusOne, d));
}

// the printed table of Apostol-Bernoulli numbers, n = 0..6
std::vector<RatFunc> printed_apostol_table() {
    const RatPoly z = RatPoly::variable();
    std::vector<RatFunc> table(7);
    table[0] = RatFunc{};
    table[1] = over_pole_power(RatPoly::constant(1), 1);
    table[2] = over_pole_power(BigRational(-2) * z, 2);
    table[3] = over_pole_power(BigRational(3) * z * RatPoly{1, 1}, 3);
    table[4] = over_pole_power(BigRational(-4) * z * RatPoly{1, 4, 1}, 4);
    table[5] = over_pole_power(BigRational(5) * z * RatPoly{1, 11, 11, 1}, 5);
    table[6] = over_pole_power(BigRational(-6) * z * RatPoly{1, 26, 66, 26, 1}, 6);
    return table;
}

std::string join_u64(const std::vector<std::uint64_t>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    return os.str();
}

std::string coeff_prefix(const std::vector<BigRational>& coeffs, std::size_t limit = 8) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < coeffs.size() && i < limit; ++i)
        os << (i ? ", " : "") << rational_to_string(coeffs[i]);
    if (coeffs.size() > limit) os << ", ...";
    os << "]";
    return os.str();
}

IdentityReport merge_reports(const std::string& id, std::vector<IdentityReport> parts,
                             std::map<std::string, std::string> grid_params) {
    IdentityReport merged;
    merged.identity_id = id;
    merged.parameters = std::move(grid_params);
    merged.status = CheckStatus::pass;
    for (const auto& part : parts) {
        if (part.status == CheckStatus::fail) {
            merged.status = CheckStatus::fail;
            merged.note = part.note.empty() ? "failed at " + part.parameters.begin()->second
                                            : part.note;
            merged.lhs = part.lhs;
            merged.rhs = part.rhs;
            return merged;
        }
        if (part.status == CheckStatus::corrected_pass) merged.status = CheckStatus::corrected_pass;
    }
    if (!parts.empty()) {
        merged.lhs = parts.front().lhs;
        merged.rhs = parts.front().rhs;
        merged.note = parts.front().note;
    }
    return merged;
}

} // namespace

IdentityReport check_gf_theorem(std::uint64_t p, unsigned coeff_count) {
    IdentityReport rep;
    rep.identity_id = "lyndon-gf-theorem";
    rep.parameters = {{"p", std::to_string(p)}, {"coefficients", std::to_string(coeff_count + 1)}};

    const RatFunc closed = lyndon_gf_closed_form(p);
    const auto direct = lyndon_series_coeffs(p, coeff_count);
    const auto expansion = taylor_series(closed, coeff_count + 1);
    bool coeffs_ok = true;
    for (unsigned i = 0; i <= coeff_count && coeffs_ok; ++i)
        coeffs_ok = expansion.coeff(i) == direct[i];

    // rebuild from the printed table where it reaches, else from the series
    bool structural_ok = true;
    if (p + 1 <= 6) {
        const auto table = printed_apostol_table();
        const BigRational c2 = make_rational(1, BigInt(2) * p);
        const BigRational cp = make_rational(1, BigInt(p) * (p + 1));
        structural_ok = closed == c2 * table[2] - cp * table[static_cast<std::size_t>(p) + 1];
    }

    // printed closed forms for the two small primes
    bool printed_ok = true;
    if (p == 2) {
        const RatFunc printed = rf_reduce(RatPoly::monomial(1, 2), poly_pow(RatPoly{1, -1}, 3));
        printed_ok = closed == printed;
    } else if (p == 3) {
        const RatFunc printed =
            rf_reduce(BigRational(2) * RatPoly::monomial(1, 2), poly_pow(kZMinusOne, 4));
        printed_ok = closed == printed;
    }

    rep.status = coeffs_ok && structural_ok && printed_ok ? CheckStatus::pass : CheckStatus::fail;
    rep.lhs = rf_to_string(closed, "t");
    rep.rhs = coeff_prefix(direct);
    if (!coeffs_ok) rep.note = "series coefficients diverge from (k^p - k)/p";
    if (!structural_ok) rep.note = "closed form differs from the printed-table combination";
    if (!printed_ok) rep.note = "closed form differs from the printed small-prime form";
    return rep;
}

IdentityReport check_frobenius_theorem(std::uint64_t p) {
    IdentityReport rep;
    rep.identity_id = "frobenius-lyndon-theorem";
    rep.parameters = {{"p", std::to_string(p)}};

    const RatFunc closed = lyndon_gf_closed_form(p);
    const RatFunc h1 = frobenius_euler(1).value.reciprocal_substitution();
    const RatFunc hp = frobenius_euler(static_cast<unsigned>(p)).value.reciprocal_substitution();
    const RatFunc diff = h1 - hp;

    const RatFunc corrected = diff / RatFunc(BigRational(p) * kZMinusOne);
    const RatFunc printed = make_rational(1, p) * (RatFunc::variable() * diff);

    const bool corrected_matches = corrected == closed;
    const bool printed_matches = printed == closed;

    rep.lhs = rf_to_string(closed, "t");
    rep.rhs = rf_to_string(corrected, "t");
    if (corrected_matches && !printed_matches) {
        rep.status = CheckStatus::corrected_pass;
        rep.note = "printed prefactor t/p gives " + rf_to_string(printed, "t") +
                   "; corrected prefactor 1/(p(t-1)) matches";
    } else if (corrected_matches) {
        rep.status = CheckStatus::pass;
        rep.note = "printed form also matches";
    } else {
        rep.status = CheckStatus::fail;
        rep.note = "corrected form does not match the closed form";
    }
    return rep;
}

IdentityReport check_euler_corollary(std::uint64_t p) {
    IdentityReport rep;
    rep.identity_id = "euler-number-corollary";
    rep.parameters = {{"p", std::to_string(p)}};

    const BigRational lhs = lyndon_gf_closed_form(p).eval(BigRational(-1));
    const BigRational ep = euler_number(static_cast<unsigned>(p));
    const BigRational e1 = euler_number(1);
    const BigRational corrected = (ep - e1) / BigRational(BigInt(2) * p);
    const BigRational printed = (ep - e1) / BigRational(p);

    rep.lhs = rational_to_string(lhs);
    rep.rhs = rational_to_string(corrected);
    if (lhs == corrected) {
        rep.status = CheckStatus::corrected_pass;
        rep.note = lhs == printed
                       ? "printed divisor p agrees here only because E_p = E_1 makes both sides 0"
                       : "printed divisor p gives " + rational_to_string(printed) +
                             "; corrected divisor 2p matches";
    } else {
        rep.status = CheckStatus::fail;
        rep.note = "corrected form does not match the closed-form value";
    }
    return rep;
}

IdentityReport check_powersum_theorem(std::uint64_t n, std::uint64_t m) {
    IdentityReport rep;
    rep.identity_id = "power-sum-theorem";
    rep.parameters = {{"n", std::to_string(n)}, {"m", std::to_string(m)}};

    BigInt divisor_side = 0;
    for (std::uint64_t d : divisors(n)) {
        BigInt inner = 0;
        for (std::uint64_t k = 0; k <= m; ++k) inner += witt_count(k, d);
        divisor_side += d * inner;
    }
    BigInt direct_powers = 0;
    for (std::uint64_t k = 1; k <= m; ++k) direct_powers += int_pow(k, n);

    const unsigned n1 = static_cast<unsigned>(n) + 1;
    const BigRational bernoulli_side =
        (bernoulli_poly(n1).eval(BigRational(m + 1)) - bernoulli_number(n1)) / BigRational(n1);

    rep.lhs = divisor_side.str();
    rep.rhs = rational_to_string(bernoulli_side);
    const bool ok =
        BigRational(divisor_side) == bernoulli_side && divisor_side == direct_powers;
    rep.status = ok ? CheckStatus::pass : CheckStatus::fail;
    if (!ok) rep.note = "divisor sum, direct power sum and Bernoulli expression disagree";
    return rep;
}

namespace {

using CheckFn = std::function<IdentityReport(const VerifyConfig&)>;

IdentityReport run_witt_oracle(const VerifyConfig& cfg) {
    std::vector<IdentityReport> parts;
    auto one = [](std::uint64_t k, std::uint64_t n) {
        IdentityReport r;
        r.parameters = {{"k", std::to_string(k)}, {"n", std::to_string(n)}};
        const BigInt formula = witt_count(k, n);
        const std::size_t enumerated = enumerate_lyndon(k, n).size();
        r.lhs = formula.str();
        r.rhs = std::to_string(enumerated);
        r.status = formula == enumerated ? CheckStatus::pass : CheckStatus::fail;
        if (r.status == CheckStatus::fail)
            r.note = "witt count disagrees with enumeration at k=" + std::to_string(k) +
                     ", n=" + std::to_string(n);
        return r;
    };
    for (std::uint64_t k = 2; k <= cfg.witt_max_k; ++k)
        for (std::uint64_t n = 1; n <= cfg.witt_max_n; ++n) parts.push_back(one(k, n));
    for (std::uint64_t n = cfg.witt_max_n + 1; n <= 14; ++n) parts.push_back(one(2, n));
    return merge_reports("witt-oracle", std::move(parts),
                         {{"k", "2.." + std::to_string(cfg.witt_max_k)},
                          {"n", "1.." + std::to_string(cfg.witt_max_n) + " (k=2: 1..14)"}});
}

IdentityReport run_prime_power(const VerifyConfig& cfg) {
    std::vector<IdentityReport> parts;
    for (std::uint64_t p : cfg.primes) {
        for (unsigned m = 1; m <= 3; ++m) {
            std::uint64_t pm = 1;
            for (unsigned i = 0; i < m; ++i) pm *= p;
            for (std::uint64_t k = 2; k <= 10; ++k) {
                IdentityReport r;
                r.parameters = {{"k", std::to_string(k)},
                                {"p", std::to_string(p)},
                                {"m", std::to_string(m)}};
                const BigInt closed = prime_power_count(k, p, m);
                const BigInt witt = witt_count(k, pm);
                r.lhs = closed.str();
                r.rhs = witt.str();
                r.status = closed == witt ? CheckStatus::pass : CheckStatus::fail;
                parts.push_back(std::move(r));
            }
        }
    }
    return merge_reports("prime-power-closed-form", std::move(parts),
                         {{"p", join_u64(cfg.primes)}, {"m", "1..3"}, {"k", "2..10"}});
}

IdentityReport run_mobius_inversion(const VerifyConfig&) {
    std::vector<IdentityReport> parts;
    for (std::uint64_t k = 0; k <= 10; ++k)
        for (std::uint64_t n = 1; n <= 30; ++n) {
            IdentityReport r;
            r.parameters = {{"k", std::to_string(k)}, {"n", std::to_string(n)}};
            const BigInt lhs = power_from_divisor_sum(k, n);
            const BigInt rhs = k == 0 ? BigInt(0) : int_pow(k, n);
            r.lhs = lhs.str();
            r.rhs = rhs.str();
            r.status = lhs == rhs ? CheckStatus::pass : CheckStatus::fail;
            parts.push_back(std::move(r));
        }
    return merge_reports("mobius-inversion", std::move(parts), {{"k", "0..10"}, {"n", "1..30"}});
}

IdentityReport run_apostol_table(const VerifyConfig&) {
    const auto printed = printed_apostol_table();
    std::vector<IdentityReport> parts;
    for (unsigned n = 0; n <= 6; ++n) {
        IdentityReport r;
        r.parameters = {{"n", std::to_string(n)}};
        const RatFunc computed = apostol_bernoulli_number(n).value;
        r.lhs = rf_to_string(computed, "z");
        r.rhs = rf_to_string(printed[n], "z");
        r.status = computed == printed[n] ? CheckStatus::pass : CheckStatus::fail;
        parts.push_back(std::move(r));
    }
    return merge_reports("apostol-table", std::move(parts), {{"n", "0..6"}});
}

IdentityReport run_apostol_poly_binomial(const VerifyConfig&) {
    const std::vector<BigRational> samples{BigRational(0), BigRational(1), BigRational(2),
                                           BigRational(-1), make_rational(1, 2)};
    std::vector<IdentityReport> parts;
    for (unsigned n = 0; n <= 10; ++n) {
        const auto symbolic = apostol_bernoulli_poly_symbolic(n);
        for (const auto& x : samples) {
            IdentityReport r;
            r.parameters = {{"n", std::to_string(n)}, {"x", rational_to_string(x)}};
            const RatFunc series = apostol_bernoulli_poly(n, x);
            const RatFunc binomial_sum = symbolic.eval(RatFunc::constant(x));
            r.lhs = rf_to_string(series, "z");
            r.rhs = rf_to_string(binomial_sum, "z");
            r.status = series == binomial_sum ? CheckStatus::pass : CheckStatus::fail;
            parts.push_back(std::move(r));
        }
        // B_n(0, z) = B_n(z)
        if (apostol_bernoulli_poly(n, BigRational(0)) != apostol_bernoulli_number(n).value) {
            IdentityReport r;
            r.parameters = {{"n", std::to_string(n)}, {"x", "0"}};
            r.status = CheckStatus::fail;
            r.note = "B_n(0, z) differs from B_n(z)";
            parts.push_back(std::move(r));
        }
    }
    return merge_reports("apostol-poly-binomial", std::move(parts),
                         {{"n", "0..10"}, {"x", "0,1,2,-1,1/2"}});
}

IdentityReport run_apostol_poly_b3(const VerifyConfig&) {
    IdentityReport rep;
    rep.identity_id = "apostol-poly-table-b3";
    rep.parameters = {{"n", "3"}};

    const RatPoly z = RatPoly::variable();
    const auto computed = apostol_bernoulli_poly_symbolic(3); // polynomial in x over Q(z)

    std::vector<RatFunc> corrected_coeffs(3);
    corrected_coeffs[2] = over_pole_power(RatPoly::constant(3), 1);           // 3 x^2 / (z-1)
    corrected_coeffs[1] = over_pole_power(BigRational(-6) * z, 2);            // -6 z x / (z-1)^2
    corrected_coeffs[0] = over_pole_power(BigRational(3) * z * RatPoly{1, 1}, 3);
    const Polynomial<RatFunc> corrected(
        {corrected_coeffs[0], corrected_coeffs[1], corrected_coeffs[2]});

    std::vector<RatFunc> printed_coeffs(3);
    printed_coeffs[2] = over_pole_power(BigRational(9) * z * kZMinusOne, 3);  // 9 z (z-1) / (z-1)^3
    printed_coeffs[1] = over_pole_power(BigRational(-6) * z, 2);
    printed_coeffs[0] = over_pole_power(BigRational(3) * z * kZMinusOne, 3);
    const Polynomial<RatFunc> printed({printed_coeffs[0], printed_coeffs[1], printed_coeffs[2]});

    // independent leg: the direct series expansion at sample points
    bool series_ok = true;
    for (const auto& x : {BigRational(1), BigRational(2), make_rational(-1, 2)})
        series_ok = series_ok && apostol_bernoulli_poly(3, x) == corrected.eval(RatFunc::constant(x));

    const bool corrected_matches = computed == corrected && series_ok;
    const bool printed_matches = computed == printed;

    rep.lhs = "3x^2/(z-1) - 6zx/(z-1)^2 + 3z(z+1)/(z-1)^3";
    rep.rhs = "printed: 9z(z-1)/(z-1)^3 x^2 - 6z/(z-1)^2 x + 3z(z-1)/(z-1)^3";
    if (corrected_matches && !printed_matches) {
        rep.status = CheckStatus::corrected_pass;
        rep.note = "printed x^2 and constant coefficients fail the series oracle; "
                   "the binomial sum over the printed number table confirms the corrected entry";
    } else {
        rep.status = corrected_matches ? CheckStatus::pass : CheckStatus::fail;
        if (!corrected_matches) rep.note = "corrected entry does not match the series expansion";
    }
    return rep;
}

IdentityReport run_frobenius_apostol(const VerifyConfig& cfg) {
    std::vector<IdentityReport> parts;
    for (unsigned n = 1; n <= cfg.frobenius_apostol_max_n; ++n) {
        IdentityReport r;
        r.parameters = {{"n", std::to_string(n)}};
        const RatFunc table = apostol_bernoulli_number(n).value;
        const RatFunc corrected = apostol_via_frobenius(n);
        // printed prefactor n/z^{-1} reads as n z
        const RatFunc printed = BigRational(n) * (RatFunc::variable() *
                                frobenius_euler(n - 1).value.reciprocal_substitution());
        r.lhs = rf_to_string(table, "z");
        r.rhs = rf_to_string(corrected, "z");
        if (corrected == table && printed != table) {
            r.status = CheckStatus::corrected_pass;
            r.note = "printed prefactor n/z^{-1} gives " + rf_to_string(printed, "z") +
                     "; corrected prefactor n/(z-1) matches";
        } else {
            r.status = corrected == table ? CheckStatus::pass : CheckStatus::fail;
            if (r.status == CheckStatus::fail) r.note = "corrected relation fails";
        }
        parts.push_back(std::move(r));
    }
    return merge_reports("frobenius-apostol-relation", std::move(parts),
                         {{"n", "1.." + std::to_string(cfg.frobenius_apostol_max_n)}});
}

IdentityReport run_gf_theorem(const VerifyConfig& cfg) {
    std::vector<IdentityReport> parts;
    for (std::uint64_t p : cfg.gf_primes) parts.push_back(check_gf_theorem(p, cfg.gf_coeff_count));
    return merge_reports("lyndon-gf-theorem", std::move(parts),
                         {{"p", join_u64(cfg.gf_primes)},
                          {"coefficients", std::to_string(cfg.gf_coeff_count + 1)}});
}

IdentityReport run_gf_p2_label(const VerifyConfig&) {
    IdentityReport rep;
    rep.identity_id = "gf-p2-label";
    rep.parameters = {{"p", "2"}};
    const RatFunc printed_value = rf_reduce(RatPoly::monomial(1, 2), poly_pow(RatPoly{1, -1}, 3));
    const bool is_p2 = printed_value == lyndon_gf_closed_form(2);
    const bool is_p3 = printed_value == lyndon_gf_closed_form(3);
    rep.lhs = rf_to_string(printed_value, "t");
    rep.rhs = rf_to_string(lyndon_gf_closed_form(2), "t");
    if (is_p2 && !is_p3) {
        rep.status = CheckStatus::corrected_pass;
        rep.note = "the p=2 substitution is labelled as the p=3 series; "
                   "t^2/(1-t)^3 is the p=2 generating function and not the p=3 one";
    } else {
        rep.status = CheckStatus::fail;
        rep.note = "label check inconsistent";
    }
    return rep;
}

IdentityReport run_frobenius_theorem(const VerifyConfig& cfg) {
    std::vector<IdentityReport> parts;
    for (std::uint64_t p : cfg.primes) parts.push_back(check_frobenius_theorem(p));
    return merge_reports("frobenius-lyndon-theorem", std::move(parts),
                         {{"p", join_u64(cfg.primes)}});
}

IdentityReport run_euler_corollary(const VerifyConfig& cfg) {
    std::vector<IdentityReport> parts;
    for (std::uint64_t p : cfg.primes) parts.push_back(check_euler_corollary(p));
    return merge_reports("euler-number-corollary", std::move(parts), {{"p", join_u64(cfg.primes)}});
}

IdentityReport run_y_apostol(const VerifyConfig& cfg) {
    std::vector<IdentityReport> parts;
    for (unsigned n = 0; n <= cfg.y_apostol_max_n; ++n) {
        IdentityReport r;
        r.parameters = {{"n", std::to_string(n)}};
        const RatFunc y = unified_y(n, BigRational(0), 1, BigRational(1), 1).value;
        const RatFunc apostol = apostol_bernoulli_number(n).value;
        r.lhs = rf_to_string(y, "beta");
        r.rhs = rf_to_string(apostol, "beta");
        r.status = y == apostol ? CheckStatus::pass : CheckStatus::fail;
        parts.push_back(std::move(r));
    }
    return merge_reports("y-reduces-to-apostol", std::move(parts),
                         {{"n", "0.." + std::to_string(cfg.y_apostol_max_n)}});
}

IdentityReport run_zeta_summ_remark(const VerifyConfig& cfg) {
    IdentityReport rep;
    rep.identity_id = "zeta-power-sum-remark";
    rep.parameters = {{"m", "0.." + std::to_string(cfg.zeta_summ_max_m)}};

    // sum_{n>=0} n^m t^n generated by repeated t d/dt of the geometric series
    RatFunc series = rf_reduce(RatPoly::constant(1), RatPoly{1, -1});
    const RatFunc t = RatFunc::variable();
    bool ok = true;
    for (unsigned m = 0; m <= cfg.zeta_summ_max_m && ok; ++m) {
        if (m > 0) series = t * series.derivative();
        const RatFunc rhs = make_rational(-1, m + 1) * apostol_bernoulli_number(m + 1).value;
        ok = series == rhs;
        if (m == 1) {
            rep.lhs = rf_to_string(series, "t");
            rep.rhs = rf_to_string(rhs, "t");
        }
    }
    if (ok) {
        rep.status = CheckStatus::corrected_pass;
        rep.note = "the printed summand t^n n^s keeps the substituted variable s; "
                   "read as t^n n^m the identity holds exactly for every m checked";
    } else {
        rep.status = CheckStatus::fail;
        rep.note = "corrected reading fails";
    }
    return rep;
}

IdentityReport run_zeta_y_special_value(const VerifyConfig& cfg) {
    std::vector<IdentityReport> parts;
    const std::vector<BigRational> betas{make_rational(1, 3), make_rational(-1, 3),
                                         make_rational(1, 2)};
    for (unsigned n = 1; n <= 6; ++n)
        for (unsigned k : {0u, 1u, 2u})
            for (int a : {1, 2})
                for (const auto& beta : betas)
                    for (int x : {1, 2}) {
                        IdentityReport r;
                        r.parameters = {{"n", std::to_string(n)},  {"k", std::to_string(k)},
                                        {"a", std::to_string(a)},  {"b", "1"},
                                        {"beta", rational_to_string(beta)},
                                        {"x", std::to_string(x)}};
                        const auto sv = zeta_special_value(n, BigRational(x), k, BigRational(a), 1,
                                                           beta, cfg.tol);
                        const double formula = to_double(sv.formula_value);
                        const double diff = std::abs(sv.series_value.value.real() - formula) +
                                            std::abs(sv.series_value.value.imag());
                        r.lhs = std::to_string(sv.series_value.value.real());
                        r.rhs = rational_to_string(sv.formula_value);
                        r.status = diff <= sv.series_value.error_bound && diff <= cfg.tol
                                       ? CheckStatus::pass
                                       : CheckStatus::fail;
                        parts.push_back(std::move(r));
                    }
    // closed instance: zeta_{1/3}(-1, 1; 1, 1, 1) = 9/4 exactly on the Y side
    {
        IdentityReport r;
        r.parameters = {{"n", "2"}, {"k", "1"}, {"a", "1"}, {"b", "1"}, {"beta", "1/3"}, {"x", "1"}};
        const auto sv =
            zeta_special_value(2, BigRational(1), 1, BigRational(1), 1, make_rational(1, 3), cfg.tol);
        r.lhs = rational_to_string(sv.formula_value);
        r.rhs = "9/4";
        r.status = sv.formula_value == make_rational(9, 4) ? CheckStatus::pass : CheckStatus::fail;
        if (r.status == CheckStatus::fail) r.note = "closed special value 9/4 not reproduced";
        parts.push_back(std::move(r));
    }
    return merge_reports("zeta-y-special-value", std::move(parts),
                         {{"n", "1..6"},
                          {"k", "0,1,2"},
                          {"a", "1,2"},
                          {"b", "1"},
                          {"beta", "1/3,-1/3,1/2"},
                          {"x", "1,2"}});
}

IdentityReport run_zeta_phi_relation(const VerifyConfig& cfg) {
    std::vector<IdentityReport> parts;
    auto push = [&](const std::string& what, bool ok, const std::string& lhs,
                    const std::string& rhs) {
        IdentityReport r;
        r.parameters = {{"case", what}};
        r.lhs = lhs;
        r.rhs = rhs;
        r.status = ok ? CheckStatus::pass : CheckStatus::fail;
        if (!ok) r.note = what + " disagrees beyond the combined error bounds";
        parts.push_back(std::move(r));
    };

    // two-path agreement on a fixed parameter sweep
    const double betas[] = {0.5, -0.5, 0.25, -0.8, 0.7};
    const double esses[] = {2.0, 0.5, -1.0, -2.5};
    for (double beta : betas)
        for (double s : esses)
            for (unsigned k : {0u, 1u, 2u}) {
                ZetaParams p;
                p.beta = beta;
                p.s = s;
                p.x = 1.25;
                p.k = k;
                p.a = 1.5;
                p.b = 2.0;
                const auto [direct, via_phi] = unified_zeta_paths(p, cfg.tol);
                const double gap = std::abs(direct.value - via_phi.value);
                push("two-path beta=" + std::to_string(beta) + " s=" + std::to_string(s) +
                         " k=" + std::to_string(k),
                     gap <= direct.error_bound + via_phi.error_bound,
                     std::to_string(direct.value.real()), std::to_string(via_phi.value.real()));
            }

    // Riemann / Hurwitz specializations of Phi
    for (double s : {2.0, 3.0, 4.5}) {
        const auto phi1 = phi_lerch(1.0, s, 1.0, cfg.tol);
        const auto zr = riemann_zeta(s, cfg.tol);
        push("zeta(s)=Phi(1,s,1) s=" + std::to_string(s),
             std::abs(phi1.value - zr.value) <= phi1.error_bound + zr.error_bound,
             std::to_string(zr.value.real()), std::to_string(phi1.value.real()));
        const auto phia = phi_lerch(1.0, s, 2.5, cfg.tol);
        const auto zh = hurwitz_zeta(s, 2.5, cfg.tol);
        push("zeta(s,a)=Phi(1,s,a) s=" + std::to_string(s),
             std::abs(phia.value - zh.value) <= phia.error_bound + zh.error_bound,
             std::to_string(zh.value.real()), std::to_string(phia.value.real()));
    }

    // single-term and geometric sanity points
    const auto phi0 = phi_lerch(0.0, 3.5, 4.0, cfg.tol);
    push("Phi(0,s,a)=a^{-s}", std::abs(phi0.value - std::pow(4.0, -3.5)) <= phi0.error_bound,
         std::to_string(phi0.value.real()), std::to_string(std::pow(4.0, -3.5)));
    const auto geo = phi_lerch(0.5, 0.0, 1.0, cfg.tol);
    push("Phi(1/2,0,1)=2", std::abs(geo.value - 2.0) <= geo.error_bound,
         std::to_string(geo.value.real()), "2");

    return merge_reports("zeta-phi-relation", std::move(parts),
                         {{"grid", "fixed sweep, tol=" + std::to_string(cfg.tol)}});
}

IdentityReport run_powersum(const VerifyConfig& cfg) {
    std::vector<IdentityReport> parts;
    for (std::uint64_t n = 1; n <= cfg.powersum_max_n; ++n)
        for (std::uint64_t m = 0; m <= cfg.powersum_max_m; ++m)
            parts.push_back(check_powersum_theorem(n, m));
    return merge_reports("power-sum-theorem", std::move(parts),
                         {{"n", "1.." + std::to_string(cfg.powersum_max_n)},
                          {"m", "0.." + std::to_string(cfg.powersum_max_m)}});
}

const std::vector<std::pair<std::string, CheckFn>>& catalogue() {
    static const std::vector<std::pair<std::string, CheckFn>> entries{
        {"witt-oracle", run_witt_oracle},
        {"prime-power-closed-form", run_prime_power},
        {"mobius-inversion", run_mobius_inversion},
        {"apostol-table", run_apostol_table},
        {"apostol-poly-binomial", run_apostol_poly_binomial},
        {"apostol-poly-table-b3", run_apostol_poly_b3},
        {"y-reduces-to-apostol", run_y_apostol},
        {"zeta-phi-relation", run_zeta_phi_relation},
        {"zeta-y-special-value", run_zeta_y_special_value},
        {"zeta-power-sum-remark", run_zeta_summ_remark},
        {"frobenius-apostol-relation", run_frobenius_apostol},
        {"lyndon-gf-theorem", run_gf_theorem},
        {"gf-p2-label", run_gf_p2_label},
        {"frobenius-lyndon-theorem", run_frobenius_theorem},
        {"euler-number-corollary", run_euler_corollary},
        {"power-sum-theorem", run_powersum},
    };
    return entries;
}

} // namespace

const std::vector<std::string>& errata_identities() {
    static const std::vector<std::string> ids{
        "frobenius-lyndon-theorem", "euler-number-corollary", "frobenius-apostol-relation",
        "apostol-poly-table-b3",    "gf-p2-label",            "zeta-power-sum-remark",
    };
    return ids;
}

const std::vector<std::string>& catalogue_identities() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const auto& [id, fn] : catalogue()) v.push_back(id);
        return v;
    }();
    return ids;
}

std::vector<IdentityReport> run_all(const VerifyConfig& config) {
    std::vector<IdentityReport> reports;
    for (const auto& [id, fn] : catalogue()) {
        if (!config.only_identity.empty() && config.only_identity != id) continue;
        IdentityReport rep = fn(config);
        rep.identity_id = id;
        reports.push_back(std::move(rep));
    }
    if (!config.only_identity.empty() && reports.empty())
        throw std::invalid_argument("run_all: unknown identity '" + config.only_identity + "'");
    return reports;
}

} // namespace lyndon
