#pragma once

// Reference values shipped with the library (data/*.json, embedded at build
// time) and an exact differ that names where each reference value comes from.

#include "charnum/linform.hpp"
#include "charnum/quartic_divisors.hpp"
#include "charnum/reference_blobs.hpp"  // generated

#include <json.hpp>

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace charnum::reference {

struct Located {
    std::string location;
    std::map<int, Integer> values;  // keyed by a
};

struct CaseSubtotals {
    quartic::DivisorId divisor = quartic::DivisorId::H;
    int a = 0;
    std::string location;
    std::vector<Integer> subtotals;
    Integer total;
};

struct CoverConstant {
    int degree = 0;
    int branch_points = 0;
    Integer value;
};

struct ReferenceData {
    std::string boundary_location;
    std::map<quartic::DivisorId, std::array<LinForm, quartic::kColumnSize>> boundary;
    Located quartic_numbers;
    Located cubic_I;
    Located cubic_T;
    Located cubic_numbers;
    std::string covers_location;
    std::vector<CoverConstant> covers;
    std::string unknowns_location;
    std::map<Symbol, Rational> unknowns;
    std::string iota_over_120_location;
    Integer iota_over_120;
    std::string multiplicities_location;
    std::map<quartic::DivisorId, Integer> discriminant_multiplicities;
    std::vector<CaseSubtotals> case_subtotals;
};

struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {
inline Integer integer_at(const nlohmann::json& j, const std::string& key) {
    return parse_integer(j.at(key).get<std::string>());
}

inline Located located(const nlohmann::json& j) {
    Located out;
    out.location = j.at("location").get<std::string>();
    for (const auto& e : j.at("entries")) out.values[e.at("a").get<int>()] = integer_at(e, "value");
    return out;
}

inline void check_version(const nlohmann::json& j, const char* name) {
    if (j.value("schema_version", 0) != 1) throw FormatError(std::string(name) + ": unsupported schema_version");
}
}  // namespace detail

/// Parses the five reference documents. Throws FormatError naming the document.
inline ReferenceData parse(const std::string& boundary, const std::string& quartic_numbers, const std::string& cubic,
                           const std::string& unknowns, const std::string& subtotals) {
    ReferenceData r;
    auto guarded = [](const char* name, auto&& fn) {
        try {
            fn();
        } catch (const FormatError&) {
            throw;
        } catch (const std::exception& e) {
            throw FormatError(std::string(name) + ": " + e.what());
        }
    };
    guarded("boundary_divisors.json", [&] {
        auto j = nlohmann::json::parse(boundary);
        detail::check_version(j, "boundary_divisors.json");
        r.boundary_location = j.at("location").get<std::string>();
        for (auto id : quartic::kAllDivisors) {
            const auto& col = j.at("columns").at(quartic::divisor_name(id));
            if (col.size() != quartic::kColumnSize) throw FormatError("column " + quartic::divisor_name(id) + " needs 14 entries");
            auto& dst = r.boundary[id];
            for (const auto& e : col) {
                LinForm f(detail::integer_at(e, "constant"));
                if (e.contains("iota")) f.add_term(Symbol::Iota, Rational(detail::integer_at(e, "iota")));
                if (e.contains("tau")) f.add_term(Symbol::Tau, Rational(detail::integer_at(e, "tau")));
                dst.at(e.at("a").get<int>()) = f;
            }
        }
    });
    guarded("quartic_numbers.json", [&] {
        auto j = nlohmann::json::parse(quartic_numbers);
        detail::check_version(j, "quartic_numbers.json");
        r.quartic_numbers = detail::located(j);
    });
    guarded("cubic_constants.json", [&] {
        auto j = nlohmann::json::parse(cubic);
        detail::check_version(j, "cubic_constants.json");
        r.cubic_I = detail::located(j.at("divisor_I"));
        r.cubic_T = detail::located(j.at("divisor_T"));
        r.cubic_numbers = detail::located(j.at("char_numbers"));
        r.covers_location = j.at("covers").at("location").get<std::string>();
        for (const auto& e : j.at("covers").at("entries"))
            r.covers.push_back({e.at("degree").get<int>(), e.at("branch_points").get<int>(), detail::integer_at(e, "value")});
    });
    guarded("quartic_unknowns.json", [&] {
        auto j = nlohmann::json::parse(unknowns);
        detail::check_version(j, "quartic_unknowns.json");
        r.unknowns_location = j.at("location").get<std::string>();
        for (const auto& [k, v] : j.at("unknowns").items()) r.unknowns[parse_symbol(k)] = parse_rational(v.get<std::string>());
        r.iota_over_120_location = j.at("iota_over_120").at("location").get<std::string>();
        r.iota_over_120 = detail::integer_at(j.at("iota_over_120"), "value");
        r.multiplicities_location = j.at("discriminant_multiplicities").at("location").get<std::string>();
        for (const auto& [k, v] : j.at("discriminant_multiplicities").at("values").items())
            r.discriminant_multiplicities[quartic::parse_divisor(k)] = parse_integer(v.get<std::string>());
    });
    guarded("case_subtotals.json", [&] {
        auto j = nlohmann::json::parse(subtotals);
        detail::check_version(j, "case_subtotals.json");
        for (const auto& c : j.at("cases")) {
            CaseSubtotals cs;
            cs.divisor = quartic::parse_divisor(c.at("divisor").get<std::string>());
            cs.a = c.at("a").get<int>();
            cs.location = c.at("location").get<std::string>();
            for (const auto& s : c.at("subtotals")) cs.subtotals.push_back(parse_integer(s.get<std::string>()));
            cs.total = detail::integer_at(c, "total");
            r.case_subtotals.push_back(std::move(cs));
        }
    });
    return r;
}

/// The embedded reference data, parsed once.
inline const ReferenceData& data() {
    static const ReferenceData r = parse(blobs::kBoundaryDivisors, blobs::kQuarticNumbers, blobs::kCubicConstants,
                                         blobs::kQuarticUnknowns, blobs::kCaseSubtotals);
    return r;
}

// ---------------------------------------------------------------------------
// Diffing

/// A flat table of keyed values; keys read like "column H, a=1".
struct Table {
    std::string location;
    std::vector<std::pair<std::string, LinForm>> entries;
};

struct Mismatch {
    std::string location;  // reference location plus key
    std::string computed;
    std::string expected;
};

struct ShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Exact comparison; empty iff every entry is equal. Tables must list the same
/// keys in the same order.
inline std::vector<Mismatch> emit_reference_diff(const Table& computed, const Table& reference) {
    if (computed.entries.size() != reference.entries.size()) {
        throw ShapeError("shape mismatch against " + reference.location + ": " + std::to_string(computed.entries.size()) +
                         " computed entries, " + std::to_string(reference.entries.size()) + " reference entries");
    }
    std::vector<Mismatch> out;
    for (std::size_t i = 0; i < computed.entries.size(); ++i) {
        const auto& [ck, cv] = computed.entries[i];
        const auto& [rk, rv] = reference.entries[i];
        if (ck != rk) throw ShapeError("shape mismatch against " + reference.location + ": key \"" + ck + "\" vs \"" + rk + "\"");
        if (cv != rv) out.push_back({reference.location + ", " + rk, cv.str(), rv.str()});
    }
    return out;
}

inline std::string boundary_key(quartic::DivisorId id, int a) {
    return "column " + quartic::divisor_name(id) + ", a=" + std::to_string(a);
}

inline Table boundary_table(const quartic::Columns& cols, std::string location = "computed") {
    Table t{std::move(location), {}};
    for (const auto& c : cols)
        for (int a = 0; a < quartic::kColumnSize; ++a) t.entries.emplace_back(boundary_key(c.divisor, a), c.entries[a]);
    return t;
}

inline Table boundary_reference(const ReferenceData& r = data()) {
    Table t{r.boundary_location, {}};
    for (auto id : quartic::kAllDivisors)
        for (int a = 0; a < quartic::kColumnSize; ++a) t.entries.emplace_back(boundary_key(id, a), r.boundary.at(id)[a]);
    return t;
}

/// Table keyed "a=..." over the given splits.
inline Table split_table(const Located& l) {
    Table t{l.location, {}};
    for (const auto& [a, v] : l.values) t.entries.emplace_back("a=" + std::to_string(a), LinForm(v));
    return t;
}

/// Computed values at the same splits as the reference table.
template <class F>
Table split_table_like(const Located& l, F&& value_at) {
    Table t{"computed", {}};
    for (const auto& [a, v] : l.values) t.entries.emplace_back("a=" + std::to_string(a), LinForm(value_at(a)));
    return t;
}

}  // namespace charnum::reference
