#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace hos {

/// Minimal structural validator for the JSON-schema subset the project ships:
/// "type" (string or list), "properties", "required", "items", "enum",
/// "minimum"/"maximum".  Returns one message per violation; empty = valid.
std::vector<std::string> schema_violations(const nlohmann::json& doc,
                                           const nlohmann::json& schema);

}  // namespace hos
