#pragma once

/**
 * @file format.hpp
 * @brief Human-readable and JSON renderings of the exact types.
 *
 * Wire formats: rationals as "p/q" strings ("p" when q = 1), polynomials
 * as JSON arrays of coefficient strings in ascending degree, rational
 * functions as {"num": [...], "den": [...]}, words as digit strings for
 * alphabets up to 10 symbols and as integer arrays beyond.
 */

#include <lyndon/identities.hpp>
#include <lyndon/lyndon_words.hpp>
#include <lyndon/special_numbers.hpp>
#include <lyndon/zeta.hpp>

#include <nlohmann/json_fwd.hpp>

#include <string>

namespace lyndon {

std::string poly_to_string(const RatPoly& p, const std::string& var);

/// Pretty rational function; denominators of the shape (var -+ 1)^d are
/// shown factored, everything else expanded.
std::string rf_to_string(const RatFunc& f, const std::string& var);

nlohmann::json poly_to_json(const RatPoly& p);
nlohmann::json rf_to_json(const RatFunc& f);
nlohmann::json word_to_json(const Word& w);
nlohmann::json numeric_result_to_json(const NumericResult& r);
nlohmann::json report_to_json(const IdentityReport& r);

} // namespace lyndon
