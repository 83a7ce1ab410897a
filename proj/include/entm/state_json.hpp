#pragma once

#include "entm/families.hpp"
#include "entm/qcore.hpp"

#include <json.hpp>

#include <string>

namespace entm {

/// JSON wire format for states: {"re": 4x4, "im": 4x4}, row-major, basis
/// |00>,|01>,|10>,|11>.
nlohmann::json matrix_to_json(const Matrix4c& m);
Matrix4c matrix_from_json(const nlohmann::json& j);  // throws ParseError

/// Parses and validates; throws ParseError on malformed JSON and
/// InvalidState naming the violated invariant.
DensityMatrix density_from_json(const nlohmann::json& j);
DensityMatrix density_from_file(const std::string& path);

/// {"family": string, "params": {...}}.
FamilyPoint family_point_from_json(const nlohmann::json& j);
nlohmann::json family_point_to_json(const FamilyPoint& fp);

}  // namespace entm
