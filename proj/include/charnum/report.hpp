#pragma once

// Machine-readable command reports. Big numbers are always decimal strings.

#include "charnum/linear_system.hpp"
#include "charnum/linform.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace charnum::report {

inline constexpr int kSchemaVersion = 1;

using Json = nlohmann::ordered_json;

struct Check {
    std::string name;
    bool passed = false;
    std::string detail;

    friend bool operator==(const Check&, const Check&) = default;
};

struct Report {
    int schema_version = kSchemaVersion;
    std::string command;
    Json inputs = Json::object();
    Json outputs = Json::object();
    std::vector<Check> checks;
    std::optional<std::int64_t> timing_us;  // only when requested, so output stays reproducible

    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }

    friend bool operator==(const Report&, const Report&) = default;
};

inline Json to_json(const Report& r) {
    Json j;
    j["schema_version"] = r.schema_version;
    j["command"] = r.command;
    j["inputs"] = r.inputs;
    j["outputs"] = r.outputs;
    j["checks"] = Json::array();
    for (const auto& c : r.checks) j["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    if (r.timing_us) j["timing_us"] = *r.timing_us;
    return j;
}

inline Report from_json(const Json& j) {
    Report r;
    r.schema_version = j.at("schema_version").get<int>();
    r.command = j.at("command").get<std::string>();
    r.inputs = j.at("inputs");
    r.outputs = j.at("outputs");
    for (const auto& c : j.at("checks"))
        r.checks.push_back({c.at("name").get<std::string>(), c.at("passed").get<bool>(), c.at("detail").get<std::string>()});
    if (j.contains("timing_us")) r.timing_us = j.at("timing_us").get<std::int64_t>();
    return r;
}

inline std::string emit(const Report& r) { return to_json(r).dump(2); }
inline Report parse(const std::string& text) { return from_json(Json::parse(text)); }

/// {"constant": "103320", "terms": {"tau": "1170"}}
inline Json linform_json(const LinForm& f) {
    Json terms = Json::object();
    for (const auto& [s, c] : f.terms()) terms[symbol_name(s)] = to_string(c);
    return {{"constant", to_string(f.constant())}, {"terms", terms}};
}

inline LinForm linform_from_json(const Json& j) {
    LinForm f(parse_rational(j.at("constant").get<std::string>()));
    for (const auto& [k, v] : j.at("terms").items()) f.add_term(parse_symbol(k), parse_rational(v.get<std::string>()));
    return f;
}

inline Json diagnostics_json(const SolveDiagnostics& d) {
    return {{"rows", d.rows},
            {"unknowns", d.unknowns},
            {"rank", d.rank},
            {"redundant_rows", d.redundant_rows},
            {"inconsistent_rows", d.inconsistent_rows},
            {"consistent", d.consistent},
            {"unique", d.unique}};
}

}  // namespace charnum::report
