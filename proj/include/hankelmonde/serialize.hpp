#pragma once

// Exchange format for matrix polynomials.
//
// JSON: {"format_version": 1, "rows": R, "cols": C, "entries": [[poly, ...], ...]}
// where each poly is a list of canonical rational strings ("-3/2", "7"),
// ascending in degree, and the zero polynomial is []. CSV is available for
// constant matrices only: a "# RxC" header line, then one line per row.

#include "hankelmonde/poly_matrix.hpp"

#include <json.hpp>

#include <string>

namespace hankelmonde {

inline constexpr int kFormatVersion = 1;

nlohmann::json poly_to_json(const Poly& p);
/// Throws ParseError on anything other than a list of rational strings.
Poly poly_from_json(const nlohmann::json& j);

nlohmann::json matrix_to_json(const PolyMatrix& m);
/// Throws ParseError on a missing field, a shape mismatch or a bad coefficient.
PolyMatrix matrix_from_json(const nlohmann::json& j);

/// Throws InvalidArgument if some entry is not constant.
std::string matrix_to_csv(const PolyMatrix& m);
/// Throws ParseError on malformed input.
PolyMatrix matrix_from_csv(const std::string& text);

} // namespace hankelmonde
