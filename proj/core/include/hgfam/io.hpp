#pragma once

#include "hgfam/family.hpp"
#include "hgfam/matrix.hpp"

#include <json.hpp>

#include <string>

namespace hgfam {

nlohmann::json matrix_to_json(const IntegerMatrix& m);
IntegerMatrix matrix_from_json(const nlohmann::json& j);

/// Reads either the text format or the JSON document form, sniffing the
/// leading character.
IntegerMatrix load_matrix_file(const std::string& path);

std::string to_string(const Rational& q);
Rational parse_rational(const std::string& text);

/// Comma-separated vector, e.g. "3,0,2".
std::vector<Int> parse_int_csv(const std::string& text);
ParameterVector parse_rational_csv(const std::string& text);

/// Sidecar document: variant, d, r, s, beta, matrix, glue-column provenance
/// and the predicted stats.
nlohmann::json instance_to_json(const FamilyInstance& instance);

}  // namespace hgfam
