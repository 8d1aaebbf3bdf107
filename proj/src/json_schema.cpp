#include "hos/json_schema.hpp"

namespace hos {

namespace {

using nlohmann::json;

bool matches_type(const json& doc, const std::string& type) {
  if (type == "object") return doc.is_object();
  if (type == "array") return doc.is_array();
  if (type == "string") return doc.is_string();
  if (type == "number") return doc.is_number();
  if (type == "integer") return doc.is_number_integer() || doc.is_number_unsigned();
  if (type == "boolean") return doc.is_boolean();
  if (type == "null") return doc.is_null();
  return false;
}

void validate(const json& doc, const json& schema, const std::string& where,
              std::vector<std::string>& out) {
  if (schema.contains("type")) {
    const json& t = schema["type"];
    bool ok = false;
    if (t.is_string()) {
      ok = matches_type(doc, t.get<std::string>());
    } else if (t.is_array()) {
      for (const auto& option : t)
        if (matches_type(doc, option.get<std::string>())) ok = true;
    }
    if (!ok) {
      out.push_back(where + ": type mismatch, expected " + t.dump());
      return;
    }
  }
  if (schema.contains("enum")) {
    bool ok = false;
    for (const auto& option : schema["enum"])
      if (doc == option) ok = true;
    if (!ok) out.push_back(where + ": value not in enum " + schema["enum"].dump());
  }
  if (doc.is_number()) {
    if (schema.contains("minimum") && doc.get<double>() < schema["minimum"].get<double>())
      out.push_back(where + ": below minimum");
    if (schema.contains("maximum") && doc.get<double>() > schema["maximum"].get<double>())
      out.push_back(where + ": above maximum");
  }
  if (doc.is_object()) {
    if (schema.contains("required")) {
      for (const auto& key : schema["required"])
        if (!doc.contains(key.get<std::string>()))
          out.push_back(where + ": missing required key " + key.get<std::string>());
    }
    if (schema.contains("properties")) {
      for (auto it = schema["properties"].begin(); it != schema["properties"].end(); ++it)
        if (doc.contains(it.key()))
          validate(doc[it.key()], it.value(), where + "." + it.key(), out);
    }
  }
  if (doc.is_array() && schema.contains("items")) {
    for (std::size_t i = 0; i < doc.size(); ++i)
      validate(doc[i], schema["items"], where + "[" + std::to_string(i) + "]", out);
  }
}

}  // namespace

std::vector<std::string> schema_violations(const nlohmann::json& doc,
                                           const nlohmann::json& schema) {
  std::vector<std::string> out;
  validate(doc, schema, "$", out);
  return out;
}

}  // namespace hos
