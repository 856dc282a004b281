#pragma once

#include <string>
#include <vector>

namespace solenoid::schema {

/// Validates `document` against `schema` (both JSON text). Supports the
/// subset of JSON Schema the shipped report schemas use: type, required,
/// properties, items, enum, additionalProperties (boolean), oneOf.
/// Returns the list of violations; empty means valid.
std::vector<std::string> validate(const std::string& schema, const std::string& document);

}  // namespace solenoid::schema
