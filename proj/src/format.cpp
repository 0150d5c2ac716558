#include <lyndon/format.hpp>

#include <nlohmann/json.hpp>

namespace lyndon {

namespace {

// "3t^2", "-t", "1/2" ... sign handled by the caller
std::string monomial_str(const BigRational& c, std::size_t deg, const std::string& var) {
    const BigRational mag = c < 0 ? BigRational(-c) : c;
    std::string s;
    if (deg == 0 || mag != 1) s = rational_to_string(mag);
    if (deg >= 1) {
        s += var;
        if (deg >= 2) s += "^" + std::to_string(deg);
    }
    return s;
}

// den == (var + shift)^d for some d >= 1?
bool is_binomial_power(const RatPoly& den, int shift, unsigned& d_out) {
    const int d = den.degree();
    if (d < 1) return false;
    const RatPoly base{BigRational(shift), BigRational(1)};
    if (den == poly_pow(base, static_cast<unsigned>(d))) {
        d_out = static_cast<unsigned>(d);
        return true;
    }
    return false;
}

} // namespace

std::string poly_to_string(const RatPoly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::string s;
    const auto& cs = p.coefficients();
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (cs[i] == 0) continue;
        if (s.empty())
            s += cs[i] < 0 ? "-" : "";
        else
            s += cs[i] < 0 ? " - " : " + ";
        s += monomial_str(cs[i], i, var);
    }
    return s;
}

std::string rf_to_string(const RatFunc& f, const std::string& var) {
    std::string num = poly_to_string(f.num(), var);
    if (f.den().degree() == 0) return num; // canonical den is monic, so 1
    std::string den;
    unsigned d = 0;
    if (is_binomial_power(f.den(), -1, d))
        den = "(" + var + " - 1)" + (d > 1 ? "^" + std::to_string(d) : "");
    else if (is_binomial_power(f.den(), 1, d))
        den = "(" + var + " + 1)" + (d > 1 ? "^" + std::to_string(d) : "");
    else
        den = "(" + poly_to_string(f.den(), var) + ")";
    if (f.num().degree() > 0 &&
        (num.find(" + ") != std::string::npos || num.find(" - ") != std::string::npos))
        num = "(" + num + ")";
    return num + " / " + den;
}

nlohmann::json poly_to_json(const RatPoly& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : p.coefficients()) arr.push_back(rational_to_string(c));
    return arr;
}

nlohmann::json rf_to_json(const RatFunc& f) {
    return {{"num", poly_to_json(f.num())}, {"den", poly_to_json(f.den())}};
}

nlohmann::json word_to_json(const Word& w) {
    if (w.alphabet_size <= 10) return w.str();
    return nlohmann::json(w.digits);
}

nlohmann::json numeric_result_to_json(const NumericResult& r) {
    return {{"value", {r.value.real(), r.value.imag()}},
            {"error_bound", r.error_bound},
            {"terms", r.terms_used}};
}

nlohmann::json report_to_json(const IdentityReport& r) {
    return {{"identity", r.identity_id}, {"parameters", r.parameters},
            {"status", to_string(r.status)}, {"lhs", r.lhs},
            {"rhs", r.rhs},                 {"note", r.note}};
}

} // namespace lyndon
