#include "json_schema.hpp"

#include <algorithm>
#include <stdexcept>

namespace schema {

namespace {

bool has_type(const nlohmann::json& doc, const std::string& type) {
  if (type == "object") return doc.is_object();
  if (type == "array") return doc.is_array();
  if (type == "string") return doc.is_string();
  if (type == "integer") return doc.is_number_integer();
  if (type == "number") return doc.is_number();
  if (type == "boolean") return doc.is_boolean();
  if (type == "null") return doc.is_null();
  throw std::invalid_argument("unknown schema type " + type);
}

}  // namespace

std::vector<std::string> validate(const nlohmann::json& doc, const nlohmann::json& schema, const std::string& path) {
  std::vector<std::string> errors;
  if (schema.contains("type")) {
    const auto& t = schema["type"];
    std::vector<std::string> types = t.is_array() ? t.get<std::vector<std::string>>()
                                                  : std::vector<std::string>{t.get<std::string>()};
    if (std::none_of(types.begin(), types.end(), [&](const std::string& s) { return has_type(doc, s); })) {
      errors.push_back(path + ": expected " + t.dump() + ", got " + doc.type_name());
      return errors;
    }
  }
  if (schema.contains("enum")) {
    const auto& values = schema["enum"];
    if (std::find(values.begin(), values.end(), doc) == values.end()) {
      errors.push_back(path + ": " + doc.dump() + " not in " + values.dump());
    }
  }
  if (schema.contains("minimum") && doc.is_number() && doc.get<double>() < schema["minimum"].get<double>()) {
    errors.push_back(path + ": below minimum");
  }
  if (doc.is_object()) {
    if (schema.contains("required")) {
      for (const auto& key : schema["required"]) {
        if (!doc.contains(key.get<std::string>())) errors.push_back(path + ": missing " + key.get<std::string>());
      }
    }
    const bool closed = schema.value("additionalProperties", true) == false;
    for (const auto& [key, value] : doc.items()) {
      if (schema.contains("properties") && schema["properties"].contains(key)) {
        auto sub = validate(value, schema["properties"][key], path + "." + key);
        errors.insert(errors.end(), sub.begin(), sub.end());
      } else if (closed) {
        errors.push_back(path + ": unexpected key " + key);
      }
    }
  }
  if (doc.is_array() && schema.contains("items")) {
    for (std::size_t i = 0; i < doc.size(); ++i) {
      auto sub = validate(doc[i], schema["items"], path + "[" + std::to_string(i) + "]");
      errors.insert(errors.end(), sub.begin(), sub.end());
    }
  }
  return errors;
}

}  // namespace schema
