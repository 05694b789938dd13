#pragma once

#include <json.hpp>

#include <filesystem>
#include <string>
#include <vector>

namespace riskforge {

/// Validates `instance` against a JSON Schema subset: type, enum, const,
/// properties, required, additionalProperties, items, minItems, maxItems,
/// minimum, maximum, minLength, and local "#/definitions/..." references.
/// Returns one message per violation, each prefixed with the JSON pointer.
std::vector<std::string> validate_schema(const nlohmann::json& schema, const nlohmann::json& instance);

/// Directory holding the shipped schemas (overridable with RISKFORGE_SCHEMA_DIR).
std::filesystem::path schema_directory();

/// Loads schemas/<name>.schema.json. Throws std::runtime_error when absent.
nlohmann::json load_schema(const std::string& name);

} // namespace riskforge
