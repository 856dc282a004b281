#include "solenoid/schema.hpp"

#include <json.hpp>

#include "solenoid/errors.hpp"

namespace solenoid::schema {

namespace {

using nlohmann::json;

bool type_matches(const std::string& type, const json& v) {
  if (type == "object") return v.is_object();
  if (type == "array") return v.is_array();
  if (type == "string") return v.is_string();
  if (type == "number") return v.is_number();
  if (type == "integer") return v.is_number_integer();
  if (type == "boolean") return v.is_boolean();
  if (type == "null") return v.is_null();
  throw PreconditionError("schema: unsupported type keyword '" + type + "'");
}

void check(const json& sch, const json& v, const std::string& path,
           std::vector<std::string>& out) {
  if (sch.contains("oneOf")) {
    int matches = 0;
    for (const auto& sub : sch["oneOf"]) {
      std::vector<std::string> errs;
      check(sub, v, path, errs);
      if (errs.empty()) ++matches;
    }
    if (matches != 1)
      out.push_back(path + ": oneOf matched " + std::to_string(matches) + " branches");
    return;
  }
  if (sch.contains("type")) {
    const auto& t = sch["type"];
    bool ok = false;
    if (t.is_string()) {
      ok = type_matches(t.get<std::string>(), v);
    } else {
      for (const auto& alt : t) ok = ok || type_matches(alt.get<std::string>(), v);
    }
    if (!ok) {
      out.push_back(path + ": type mismatch");
      return;
    }
  }
  if (sch.contains("enum")) {
    bool ok = false;
    for (const auto& e : sch["enum"]) ok = ok || e == v;
    if (!ok) out.push_back(path + ": value not in enum");
  }
  if (v.is_object()) {
    if (sch.contains("required"))
      for (const auto& key : sch["required"])
        if (!v.contains(key.get<std::string>()))
          out.push_back(path + ": missing required key '" + key.get<std::string>() + "'");
    const json* props = sch.contains("properties") ? &sch["properties"] : nullptr;
    for (auto it = v.begin(); it != v.end(); ++it) {
      if (props && props->contains(it.key())) {
        check((*props)[it.key()], it.value(), path + "/" + it.key(), out);
      } else if (sch.contains("additionalProperties") &&
                 sch["additionalProperties"].is_boolean() &&
                 !sch["additionalProperties"].get<bool>()) {
        out.push_back(path + ": unexpected key '" + it.key() + "'");
      }
    }
  }
  if (v.is_array() && sch.contains("items")) {
    for (std::size_t i = 0; i < v.size(); ++i)
      check(sch["items"], v[i], path + "[" + std::to_string(i) + "]", out);
  }
}

}  // namespace

std::vector<std::string> validate(const std::string& schema, const std::string& document) {
  json sch, doc;
  try {
    sch = json::parse(schema);
  } catch (const json::parse_error& e) {
    throw PreconditionError(std::string("schema: schema is not valid JSON: ") + e.what());
  }
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    return {std::string("document is not valid JSON: ") + e.what()};
  }
  std::vector<std::string> out;
  check(sch, doc, "#", out);
  return out;
}

}  // namespace solenoid::schema
