#pragma once

#include <fstream>
#include <set>
#include <string>

#include <nlohmann/json.hpp>

#include "core/error.hpp"

namespace l4p::core {

using Json = nlohmann::json;

inline Json load_json_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw IoError("cannot open JSON file: " + path);
    try {
        return Json::parse(f);
    } catch (const Json::exception& e) {
        throw ConfigError("JSON parse error in " + path + ": " + e.what());
    }
}

inline void save_json_file(const std::string& path, const Json& j, int indent = 2) {
    std::ofstream f(path, std::ios::trunc);
    if (!f) throw IoError("cannot open JSON file for writing: " + path);
    f << j.dump(indent) << "\n";
    if (!f) throw IoError("JSON write failure: " + path);
}

// Config documents are schema-strict: keys outside the allowed set are
// rejected so typos fail loudly instead of being silently ignored.
inline void reject_unknown_keys(const Json& j, const std::set<std::string>& allowed,
                                const std::string& where) {
    if (!j.is_object()) throw ConfigError(where + ": expected a JSON object");
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (!allowed.count(it.key()))
            throw ConfigError(where + ": unknown key '" + it.key() + "'");
    }
}

template <typename T>
T get_required(const Json& j, const std::string& key, const std::string& where) {
    if (!j.contains(key)) throw ConfigError(where + ": missing required key '" + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const Json::exception& e) {
        throw ConfigError(where + ": bad value for '" + key + "': " + e.what());
    }
}

template <typename T>
T get_or(const Json& j, const std::string& key, const T& fallback, const std::string& where) {
    if (!j.contains(key)) return fallback;
    try {
        return j.at(key).get<T>();
    } catch (const Json::exception& e) {
        throw ConfigError(where + ": bad value for '" + key + "': " + e.what());
    }
}

}  // namespace l4p::core
