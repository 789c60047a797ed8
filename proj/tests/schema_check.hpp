#pragma once

// Minimal JSON-schema checker covering the subset the shipped schemas use:
// type (string or array of strings), enum, required, properties,
// additionalProperties (boolean), items, and local "#/..." references.

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace schemacheck {

using nlohmann::json;

inline const json& resolve_ref(const json& root, const std::string& ref) {
    const json* node = &root;
    std::size_t pos = 2;  // skip "#/"
    while (pos < ref.size()) {
        const std::size_t next = ref.find('/', pos);
        const std::string key = ref.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        node = &node->at(key);
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return *node;
}

inline bool type_matches(const json& value, const std::string& type) {
    if (type == "object") return value.is_object();
    if (type == "array") return value.is_array();
    if (type == "string") return value.is_string();
    if (type == "number") return value.is_number();
    if (type == "integer") return value.is_number_integer();
    if (type == "boolean") return value.is_boolean();
    if (type == "null") return value.is_null();
    return false;
}

inline void validate_node(const json& root, const json& schema, const json& value, const std::string& path,
                          std::vector<std::string>& errors) {
    if (schema.contains("$ref")) {
        validate_node(root, resolve_ref(root, schema["$ref"].get<std::string>()), value, path, errors);
        return;
    }
    if (schema.contains("enum")) {
        bool matched = false;
        for (const auto& allowed : schema["enum"])
            if (allowed == value) matched = true;
        if (!matched) errors.push_back(path + ": value not in enum");
        return;
    }
    if (schema.contains("type")) {
        const json& t = schema["type"];
        bool matched = false;
        if (t.is_string()) {
            matched = type_matches(value, t.get<std::string>());
        } else {
            for (const auto& alt : t)
                if (type_matches(value, alt.get<std::string>())) matched = true;
        }
        if (!matched) {
            errors.push_back(path + ": type mismatch");
            return;
        }
    }
    if (value.is_object()) {
        if (schema.contains("required"))
            for (const auto& key : schema["required"])
                if (!value.contains(key.get<std::string>()))
                    errors.push_back(path + ": missing required key " + key.get<std::string>());
        const json props = schema.value("properties", json::object());
        const bool extra_ok = schema.value("additionalProperties", true);
        for (const auto& [key, sub] : value.items()) {
            if (props.contains(key)) {
                validate_node(root, props[key], sub, path + "/" + key, errors);
            } else if (!extra_ok) {
                errors.push_back(path + ": unexpected key " + key);
            }
        }
    }
    if (value.is_array() && schema.contains("items")) {
        for (std::size_t i = 0; i < value.size(); ++i)
            validate_node(root, schema["items"], value[i], path + "/" + std::to_string(i), errors);
    }
}

inline std::vector<std::string> validate(const json& schema, const json& value) {
    std::vector<std::string> errors;
    validate_node(schema, schema, value, "", errors);
    return errors;
}

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return json::parse(in);
}

}  // namespace schemacheck
