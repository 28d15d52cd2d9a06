#pragma once

#include <string_view>

#include <json.hpp>

#include "qpf/pairs/pair.hpp"

namespace qpf {

// "generic", "root-of-unity(l)", "q=<rational>".
FieldSpec parse_field_spec(std::string_view text);

// Row-major nested arrays of scalar strings.
template <class F>
nlohmann::json matrix_to_json(const SpMat<F>& m);
template <class F>
SpMat<F> matrix_from_json(const nlohmann::json& j, const FieldSpec& field);

/// {provenance, field, dim, degree_e, R}.
template <class F>
nlohmann::json pair_to_json(const HeckePair<F>& p);
/// Loads and validates an explicit pair. A "field" entry, if present, must
/// match the requested field.
template <class F>
HeckePair<F> pair_from_json(const nlohmann::json& j, const FieldSpec& field);

/// Pair descriptors:
///   pair := std(n) | cable(pair, e) | dsum(pair, ...) | dual(pair) | unit | @file
/// Throws ParseError with the offending position and token.
template <class F>
HeckePair<F> parse_pair(std::string_view text, const FieldSpec& field);

}  // namespace qpf
