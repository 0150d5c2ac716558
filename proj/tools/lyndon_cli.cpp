// Command-line front end: counting, enumeration, special-number tables,
// zeta evaluation and the identity suite, as human-readable text or a
// stable JSON envelope (--json).
//
// Exit codes: 0 success, 2 usage error, 3 divergent or degenerate
// parameters, 4 identity failure.

#include <lyndon/errors.hpp>
#include <lyndon/format.hpp>
#include <lyndon/identities.hpp>
#include <lyndon/lyndon_words.hpp>
#include <lyndon/number_theory.hpp>
#include <lyndon/special_numbers.hpp>
#include <lyndon/zeta.hpp>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <complex>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

namespace {

using nlohmann::json;
using namespace lyndon;

constexpr const char* format_version = "1";

struct Cli {
    bool as_json = false;
    bool json_lines = false; // verify only: raw report lines
    int exit_code = 0;
};

void emit(const Cli& cli, const std::string& command, json inputs, json result,
          const std::string& human) {
    if (cli.as_json) {
        const json envelope = {{"command", command},
                               {"inputs", std::move(inputs)},
                               {"result", std::move(result)},
                               {"format_version", format_version}};
        std::cout << envelope.dump(2) << "\n";
    } else {
        std::cout << human;
    }
}

std::complex<double> parse_complex(const std::string& s) {
    const auto comma = s.find(',');
    try {
        if (comma == std::string::npos) return {std::stod(s), 0.0};
        return {std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
    } catch (const std::exception&) {
        throw CLI::ValidationError("expected a real or 're,im' complex number, got '" + s + "'");
    }
}

std::uint64_t enumeration_budget() {
    if (const char* env = std::getenv("LYNDON_ENUM_BUDGET")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw std::invalid_argument("LYNDON_ENUM_BUDGET is not a valid integer");
        }
    }
    return default_enumeration_budget;
}

json complex_json(std::complex<double> z) { return json::array({z.real(), z.imag()}); }

std::string numeric_human(const NumericResult& r) {
    std::ostringstream os;
    os.precision(15);
    os << "value " << r.value.real();
    if (r.value.imag() != 0.0) os << (r.value.imag() < 0 ? " - " : " + ")
                                  << std::abs(r.value.imag()) << "i";
    os << "\nerror_bound " << r.error_bound << "\nterms " << r.terms_used << "\n";
    return os.str();
}

void add_count(CLI::App& app, Cli& cli) {
    auto* cmd = app.add_subcommand("count", "Number of k-ary Lyndon words of length n");
    auto k = std::make_shared<std::uint64_t>();
    auto n = std::make_shared<std::uint64_t>();
    auto closed = std::make_shared<bool>(false);
    cmd->add_option("k", *k, "alphabet size")->required();
    cmd->add_option("n", *n, "word length")->required();
    cmd->add_flag("--closed-form", *closed, "also evaluate the prime-power closed form");
    cmd->callback([&cli, k, n, closed] {
        const BigInt count = witt_count(*k, *n);
        json result = {{"count", count.str()}};
        std::string human = "L_" + std::to_string(*k) + "(" + std::to_string(*n) +
                            ") = " + count.str() + "\n";
        if (*closed) {
            const Factorization f = factorize(*n);
            if (f.prime_powers.size() != 1)
                throw std::invalid_argument("--closed-form requires n to be a prime power");
            const BigInt cf = prime_power_count(*k, f.prime_powers[0].prime,
                                                f.prime_powers[0].exponent);
            if (cf != count)
                throw std::logic_error("closed form disagrees with divisor sum (arithmetic bug)");
            result["closed_form"] = cf.str();
            result["agree"] = true;
            human += "closed_form = " + cf.str() + " (agree)\n";
        }
        emit(cli, "count", {{"k", *k}, {"n", *n}, {"closed_form", *closed}}, result, human);
    });
}

void add_enumerate(CLI::App& app, Cli& cli) {
    auto* cmd = app.add_subcommand("enumerate", "List the Lyndon words of length n over k symbols");
    auto k = std::make_shared<std::uint64_t>();
    auto n = std::make_shared<std::uint64_t>();
    auto limit = std::make_shared<std::uint64_t>(0);
    cmd->add_option("k", *k, "alphabet size")->required();
    cmd->add_option("n", *n, "word length")->required();
    cmd->add_option("--limit", *limit, "print at most this many words (0 = all)");
    cmd->callback([&cli, k, n, limit] {
        const auto words = enumerate_lyndon(*k, *n, enumeration_budget());
        const std::size_t shown = *limit > 0 && *limit < words.size()
                                      ? static_cast<std::size_t>(*limit)
                                      : words.size();
        json arr = json::array();
        std::string human;
        for (std::size_t i = 0; i < shown; ++i) {
            arr.push_back(word_to_json(words[i]));
            human += *k <= 10 ? words[i].str() : json(words[i].digits).dump();
            human += "\n";
        }
        if (shown < words.size())
            human += "... (" + std::to_string(words.size() - shown) + " more)\n";
        emit(cli, "enumerate", {{"k", *k}, {"n", *n}, {"limit", *limit}},
             {{"count", words.size()}, {"words", arr}}, human);
    });
}

void add_series(CLI::App& app, Cli& cli) {
    auto* cmd = app.add_subcommand("series", "Coefficients L_k(p) of the prime-length series");
    auto p = std::make_shared<std::uint64_t>();
    auto kmax = std::make_shared<unsigned>();
    cmd->add_option("p", *p, "prime length")->required();
    cmd->add_option("K", *kmax, "last alphabet size")->required();
    cmd->callback([&cli, p, kmax] {
        const auto coeffs = lyndon_series_coeffs(*p, *kmax);
        json arr = json::array();
        std::string human;
        for (const auto& c : coeffs) {
            arr.push_back(rational_to_string(c));
            human += rational_to_string(c) + "\n";
        }
        emit(cli, "series", {{"p", *p}, {"K", *kmax}}, {{"coefficients", arr}}, human);
    });
}

void add_gf(CLI::App& app, Cli& cli) {
    auto* cmd = app.add_subcommand("gf", "Closed form of the prime-length generating function");
    auto p = std::make_shared<std::uint64_t>();
    cmd->add_option("p", *p, "prime length")->required();
    cmd->callback([&cli, p] {
        const RatFunc f = lyndon_gf_closed_form(*p);
        emit(cli, "gf", {{"p", *p}},
             {{"rational_function", rf_to_json(f)}, {"display", rf_to_string(f, "t")}},
             "f(t, " + std::to_string(*p) + ") = " + rf_to_string(f, "t") + "\n");
    });
}

void add_special(CLI::App& app, Cli& cli) {
    auto* cmd = app.add_subcommand("special", "Special numbers and polynomials");
    auto family = std::make_shared<std::string>();
    auto n = std::make_shared<unsigned>();
    auto x = std::make_shared<std::string>();
    auto kk = std::make_shared<unsigned>(1);
    auto a = std::make_shared<std::string>("1");
    auto b = std::make_shared<unsigned>(1);
    auto poly = std::make_shared<bool>(false);
    cmd->add_option("family", *family, "bernoulli | euler | frobenius | apostol | unified-y")
        ->required()
        ->check(CLI::IsMember({"bernoulli", "euler", "frobenius", "apostol", "unified-y"}));
    cmd->add_option("n", *n, "index")->required();
    cmd->add_option("--x", *x, "argument x as a rational (apostol, unified-y)");
    cmd->add_option("--k", *kk, "unified-y parameter k");
    cmd->add_option("--a", *a, "unified-y parameter a as a rational");
    cmd->add_option("--b", *b, "unified-y parameter b (positive integer)");
    cmd->add_flag("--poly", *poly, "bernoulli polynomial instead of the number");
    cmd->callback([&cli, family, n, x, kk, a, b, poly] {
        json inputs = {{"family", *family}, {"n", *n}};
        json result;
        std::string human;
        if (*family == "bernoulli") {
            if (*poly) {
                const RatPoly bp = bernoulli_poly(*n);
                result = {{"polynomial", poly_to_json(bp)}, {"display", poly_to_string(bp, "x")}};
                human = "B_" + std::to_string(*n) + "(x) = " + poly_to_string(bp, "x") + "\n";
            } else {
                const BigRational v = bernoulli_number(*n);
                result = {{"value", rational_to_string(v)}};
                human = "B_" + std::to_string(*n) + " = " + rational_to_string(v) + "\n";
            }
        } else if (*family == "euler") {
            const BigRational v = euler_number(*n);
            result = {{"value", rational_to_string(v)}};
            human = "E_" + std::to_string(*n) + " = " + rational_to_string(v) + "\n";
        } else if (*family == "frobenius") {
            const RatFunc v = frobenius_euler(*n).value;
            result = {{"rational_function", rf_to_json(v)}, {"display", rf_to_string(v, "z")}};
            human = "H_" + std::to_string(*n) + "(z) = " + rf_to_string(v, "z") + "\n";
        } else if (*family == "apostol") {
            RatFunc v;
            std::string name = "B_" + std::to_string(*n);
            if (x->empty()) {
                v = apostol_bernoulli_number(*n).value;
                name += "(z)";
            } else {
                inputs["x"] = *x;
                v = apostol_bernoulli_poly(*n, parse_rational(*x));
                name += "(" + *x + ", z)";
            }
            result = {{"rational_function", rf_to_json(v)}, {"display", rf_to_string(v, "z")}};
            human = name + " = " + rf_to_string(v, "z") + "\n";
        } else { // unified-y
            const BigRational xv = x->empty() ? BigRational(0) : parse_rational(*x);
            inputs["x"] = rational_to_string(xv);
            inputs["k"] = *kk;
            inputs["a"] = *a;
            inputs["b"] = *b;
            const UnifiedY y = unified_y(*n, xv, *kk, parse_rational(*a), *b);
            result = {{"rational_function", rf_to_json(y.value)},
                      {"display", rf_to_string(y.value, "beta")}};
            human = "Y_" + std::to_string(*n) + " = " + rf_to_string(y.value, "beta") + "\n";
        }
        emit(cli, "special", inputs, result, human);
    });
}

void add_zeta(CLI::App& app, Cli& cli) {
    auto* cmd = app.add_subcommand("zeta", "Numeric zeta-type evaluations");
    cmd->require_subcommand(1);
    auto tol = std::make_shared<double>(default_zeta_tolerance);
    cmd->add_option("--tol", *tol, "absolute tolerance")->capture_default_str();

    auto* phi = cmd->add_subcommand("phi", "Hurwitz-Lerch Phi(z, s, a)");
    auto z = std::make_shared<std::string>("0");
    auto s = std::make_shared<std::string>("0");
    auto a = std::make_shared<double>(1.0);
    phi->add_option("--z", *z, "complex z, 're' or 're,im'")->required();
    phi->add_option("--s", *s, "complex s")->required();
    phi->add_option("--a", *a, "shift a > 0")->required();
    phi->callback([&cli, z, s, a, tol] {
        const auto r = phi_lerch(parse_complex(*z), parse_complex(*s), *a, *tol);
        emit(cli, "zeta phi",
             {{"z", complex_json(parse_complex(*z))}, {"s", complex_json(parse_complex(*s))},
              {"a", *a}, {"tol", *tol}},
             numeric_result_to_json(r), numeric_human(r));
    });

    auto* hur = cmd->add_subcommand("hurwitz", "zeta(s, a), Re(s) > 1");
    auto hs = std::make_shared<std::string>();
    auto ha = std::make_shared<double>(1.0);
    hur->add_option("--s", *hs)->required();
    hur->add_option("--a", *ha)->required();
    hur->callback([&cli, hs, ha, tol] {
        const auto r = hurwitz_zeta(parse_complex(*hs), *ha, *tol);
        emit(cli, "zeta hurwitz",
             {{"s", complex_json(parse_complex(*hs))}, {"a", *ha}, {"tol", *tol}},
             numeric_result_to_json(r), numeric_human(r));
    });

    auto* rie = cmd->add_subcommand("riemann", "zeta(s), Re(s) > 1");
    auto rs = std::make_shared<std::string>();
    rie->add_option("--s", *rs)->required();
    rie->callback([&cli, rs, tol] {
        const auto r = riemann_zeta(parse_complex(*rs), *tol);
        emit(cli, "zeta riemann", {{"s", complex_json(parse_complex(*rs))}, {"tol", *tol}},
             numeric_result_to_json(r), numeric_human(r));
    });

    auto* uni = cmd->add_subcommand("unified", "unified zeta_beta(s, x; k, a, b)");
    auto ub = std::make_shared<std::string>();
    auto us = std::make_shared<std::string>();
    auto ux = std::make_shared<double>(1.0);
    auto uk = std::make_shared<unsigned>(1);
    auto ua = std::make_shared<double>(1.0);
    auto ubb = std::make_shared<double>(1.0);
    auto both = std::make_shared<bool>(false);
    uni->add_option("--beta", *ub)->required();
    uni->add_option("--s", *us)->required();
    uni->add_option("--x", *ux)->capture_default_str();
    uni->add_option("--k", *uk)->capture_default_str();
    uni->add_option("--a", *ua)->capture_default_str();
    uni->add_option("--b", *ubb)->capture_default_str();
    uni->add_flag("--both-paths", *both, "also evaluate via the Phi relation");
    uni->callback([&cli, ub, us, ux, uk, ua, ubb, both, tol] {
        ZetaParams params{parse_complex(*ub), parse_complex(*us), *ux, *uk, *ua, *ubb};
        const json inputs = {{"beta", complex_json(params.beta)}, {"s", complex_json(params.s)},
                             {"x", *ux}, {"k", *uk}, {"a", *ua}, {"b", *ubb}, {"tol", *tol}};
        if (*both) {
            const auto [direct, via_phi] = unified_zeta_paths(params, *tol);
            emit(cli, "zeta unified", inputs,
                 {{"direct", numeric_result_to_json(direct)},
                  {"via_phi", numeric_result_to_json(via_phi)}},
                 "direct:\n" + numeric_human(direct) + "via phi:\n" + numeric_human(via_phi));
        } else {
            const auto r = unified_zeta(params, *tol);
            emit(cli, "zeta unified", inputs, numeric_result_to_json(r), numeric_human(r));
        }
    });

    auto* sv = cmd->add_subcommand("special-value",
                                   "series at s = 1-n against the exact Y-polynomial value");
    auto vn = std::make_shared<unsigned>();
    auto vx = std::make_shared<std::string>("1");
    auto vk = std::make_shared<unsigned>(1);
    auto va = std::make_shared<std::string>("1");
    auto vb = std::make_shared<unsigned>(1);
    auto vbeta = std::make_shared<std::string>();
    sv->add_option("--n", *vn)->required();
    sv->add_option("--x", *vx)->capture_default_str();
    sv->add_option("--k", *vk)->capture_default_str();
    sv->add_option("--a", *va)->capture_default_str();
    sv->add_option("--b", *vb)->capture_default_str();
    sv->add_option("--beta", *vbeta, "rational beta")->required();
    sv->callback([&cli, vn, vx, vk, va, vb, vbeta, tol] {
        const auto r = zeta_special_value(*vn, parse_rational(*vx), *vk, parse_rational(*va), *vb,
                                          parse_rational(*vbeta), *tol);
        const double diff =
            std::abs(r.series_value.value - std::complex<double>(to_double(r.formula_value), 0));
        std::ostringstream human;
        human.precision(15);
        human << "series " << r.series_value.value.real() << " (error_bound "
              << r.series_value.error_bound << ", terms " << r.series_value.terms_used << ")\n"
              << "formula " << rational_to_string(r.formula_value) << "\n"
              << "difference " << diff << "\n";
        emit(cli, "zeta special-value",
             {{"n", *vn}, {"x", *vx}, {"k", *vk}, {"a", *va}, {"b", *vb}, {"beta", *vbeta},
              {"tol", *tol}},
             {{"series", numeric_result_to_json(r.series_value)},
              {"formula", rational_to_string(r.formula_value)},
              {"difference", diff}},
             human.str());
    });
}

void add_verify(CLI::App& app, Cli& cli) {
    auto* cmd = app.add_subcommand("verify", "Run the identity catalogue");
    auto id = std::make_shared<std::string>("all");
    auto primes = std::make_shared<std::vector<std::uint64_t>>();
    auto coeffs = std::make_shared<unsigned>(0);
    auto tol = std::make_shared<double>(0.0);
    cmd->add_option("identity", *id, "identity id or 'all'");
    cmd->add_option("--p", *primes, "override the prime grid");
    cmd->add_option("--coeffs", *coeffs, "override the coefficient count");
    cmd->add_option("--tol", *tol, "override the numeric tolerance");
    cmd->add_flag("--jsonl", cli.json_lines, "one JSON report per line");
    cmd->callback([&cli, id, primes, coeffs, tol] {
        VerifyConfig config;
        if (*id != "all") config.only_identity = *id;
        if (!primes->empty()) {
            for (std::uint64_t p : *primes)
                if (!is_prime(p)) throw std::invalid_argument("--p values must be prime");
            config.primes = *primes;
            config.gf_primes = *primes;
        }
        if (*coeffs > 0) config.gf_coeff_count = *coeffs;
        if (*tol > 0) config.tol = *tol;

        const auto reports = run_all(config);
        unsigned pass = 0, corrected = 0, fail = 0;
        json arr = json::array();
        std::string human;
        for (const auto& rep : reports) {
            arr.push_back(report_to_json(rep));
            switch (rep.status) {
                case CheckStatus::pass: ++pass; break;
                case CheckStatus::corrected_pass: ++corrected; break;
                case CheckStatus::fail: ++fail; break;
            }
            human += to_string(rep.status) + "  " + rep.identity_id;
            if (!rep.note.empty()) human += "  [" + rep.note + "]";
            human += "\n";
        }
        human += "summary: " + std::to_string(pass) + " pass, " + std::to_string(corrected) +
                 " corrected-pass, " + std::to_string(fail) + " fail\n";
        if (cli.json_lines) {
            for (const auto& rep : reports) std::cout << report_to_json(rep).dump() << "\n";
            std::cout << json{{"summary",
                               {{"pass", pass}, {"corrected_pass", corrected}, {"fail", fail}}}}
                             .dump()
                      << "\n";
        } else {
            emit(cli, "verify", {{"identity", *id}},
                 {{"reports", arr},
                  {"summary", {{"pass", pass}, {"corrected_pass", corrected}, {"fail", fail}}}},
                 human);
        }
        if (fail > 0) cli.exit_code = 4;
    });
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Lyndon-word counts, special numbers and zeta-type functions"};
    app.require_subcommand(1);
    Cli cli;
    app.add_flag("--json", cli.as_json, "machine-readable output envelope");

    add_count(app, cli);
    add_enumerate(app, cli);
    add_series(app, cli);
    add_gf(app, cli);
    add_special(app, cli);
    add_zeta(app, cli);
    add_verify(app, cli);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const pole_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const divergence_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const budget_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const convergence_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return cli.exit_code;
}
