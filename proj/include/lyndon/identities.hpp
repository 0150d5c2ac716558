#pragma once

/**
 * @file identities.hpp
 * @brief Executable catalogue of the generating-function identities,
 *        one machine-checkable report per identity.
 *
 * Checks whose source statement fails its own generating-function oracle
 * evaluate the printed and the corrected form side by side and report
 * corrected-pass; the fixed errata list below is the only place that
 * status is permitted. Everything is exact except the two numeric zeta
 * checks, which compare within proven error bounds.
 */

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace lyndon {

enum class CheckStatus { pass, fail, corrected_pass };

std::string to_string(CheckStatus s);

struct IdentityReport {
    std::string identity_id;
    std::map<std::string, std::string> parameters;
    CheckStatus status = CheckStatus::fail;
    std::string lhs;
    std::string rhs;
    std::string note;
};

/// Closed form of the Lyndon generating function against the direct
/// (k^p - k)/p series through coeff_count coefficients, plus the printed
/// p = 2 and p = 3 closed forms.
IdentityReport check_gf_theorem(std::uint64_t p, unsigned coeff_count);

/// Frobenius-Euler route to the Lyndon generating function: printed
/// t(H_1 - H_p)/p versus corrected (H_1 - H_p)/(p(t-1)).
IdentityReport check_frobenius_theorem(std::uint64_t p);

/// Euler-number value at t = -1: printed (E_p - E_1)/p versus corrected
/// (E_p - E_1)/(2p).
IdentityReport check_euler_corollary(std::uint64_t p);

/// Divisor-sum power identity against the Bernoulli power-sum formula.
IdentityReport check_powersum_theorem(std::uint64_t n, std::uint64_t m);

/// Parameter grids for the full catalogue run.
struct VerifyConfig {
    std::vector<std::uint64_t> primes{2, 3, 5, 7};          // errata checks
    std::vector<std::uint64_t> gf_primes{2, 3, 5, 7, 11, 13};
    unsigned gf_coeff_count = 50;
    std::uint64_t witt_max_k = 4;
    std::uint64_t witt_max_n = 8;
    std::uint64_t powersum_max_n = 8;
    std::uint64_t powersum_max_m = 20;
    unsigned frobenius_apostol_max_n = 20;
    unsigned y_apostol_max_n = 12;
    unsigned zeta_summ_max_m = 10;
    double tol = 1e-10;
    std::string only_identity; // run just this catalogue entry when non-empty
};

/// One merged report per catalogued identity, in fixed catalogue order.
std::vector<IdentityReport> run_all(const VerifyConfig& config = {});

/// Identity ids of the documented errata; exactly these may ever report
/// corrected-pass.
const std::vector<std::string>& errata_identities();

/// All catalogue identity ids in run order.
const std::vector<std::string>& catalogue_identities();

} // namespace lyndon
