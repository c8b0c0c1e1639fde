#pragma once

// Characteristic numbers alpha^a beta^(13-a) of the boundary divisors of the
// space of stable maps of genus 3 to the plane of degree 4.

#include "charnum/configuration.hpp"
#include "charnum/hurwitz.hpp"

#include <json.hpp>

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace charnum::quartic {

inline constexpr int kConditions = 13;  // for divisor classes
inline constexpr int kColumnSize = kConditions + 1;

enum class DivisorId { Delta0, H, I, T, P, Q, X, Y };

inline constexpr std::array<DivisorId, 8> kAllDivisors = {DivisorId::Delta0, DivisorId::H, DivisorId::I, DivisorId::T,
                                                          DivisorId::P,      DivisorId::Q, DivisorId::X, DivisorId::Y};

inline std::string divisor_name(DivisorId d) {
    switch (d) {
        case DivisorId::Delta0: return "Delta0";
        case DivisorId::H: return "H";
        case DivisorId::I: return "I";
        case DivisorId::T: return "T";
        case DivisorId::P: return "P";
        case DivisorId::Q: return "Q";
        case DivisorId::X: return "X";
        case DivisorId::Y: return "Y";
    }
    return "?";
}

inline DivisorId parse_divisor(const std::string& name) {
    for (auto d : kAllDivisors)
        if (divisor_name(d) == name) return d;
    throw std::invalid_argument("unknown divisor \"" + name + "\" (expected Delta0, H, I, T, P, Q, X or Y)");
}

/// How the T column treats covers whose image line turns about the known
/// marked point. The moduli class gives 5 tau - 1640 for that family; the
/// reference column carries the number 6120 instead, which agrees at the
/// solved tau.
enum class CenteredPencil { Constant, Symbolic };

inline constexpr int kCenteredPencilConstant = 6120;

struct DivisorColumn {
    DivisorId divisor = DivisorId::Delta0;
    std::array<LinForm, kColumnSize> entries;  // index = a
};

namespace detail {
inline config::ComponentSpec double_line(std::string name, int branch) {
    return {std::move(name), config::ImageKind::Line, 2, branch, std::nullopt, hurwitz::connected_cover_count(2, branch)};
}
inline config::ComponentSpec simple(std::string name, config::ImageKind kind) {
    return {std::move(name), kind, 1, 0, std::nullopt, 1};
}
}  // namespace detail

/// Double cover of a conic by a genus-3 curve (hyperelliptic).
inline config::DivisorSpec divisor_H() {
    config::DivisorSpec d;
    d.name = "H";
    d.components = {{"c", config::ImageKind::Conic, 2, 8, std::nullopt, hurwitz::connected_cover_count(2, 8)}};
    return d;
}

/// Two elliptic double covers of lines joined at a node, ramified on the first.
inline config::DivisorSpec divisor_X() {
    config::DivisorSpec d;
    d.name = "X";
    d.components = {detail::double_line("l1", 4), detail::double_line("l2", 6)};
    d.nodes = {{"n", {0, 1}, config::Contact::Transverse, 3, {0}, 2}};
    return d;
}

/// Genus-3 double cover of a line with two lines through the image of a
/// conjugate pair of points.
inline config::DivisorSpec divisor_Y() {
    config::DivisorSpec d;
    d.name = "Y";
    d.components = {detail::double_line("m", 8), detail::simple("n2", config::ImageKind::Line),
                    detail::simple("n3", config::ImageKind::Line)};
    d.nodes = {{"s", {0, 1, 2}, config::Contact::Transverse, 4, {}, 2}};
    d.symmetries = {{{0, 2, 1}, {0}}};
    return d;
}

/// Conic joined at two nodes to a genus-2 double cover of a line.
inline config::DivisorSpec divisor_P() {
    config::DivisorSpec d;
    d.name = "P";
    d.components = {detail::simple("c", config::ImageKind::Conic), detail::double_line("l", 6)};
    d.nodes = {{"n1", {0, 1}, config::Contact::Transverse, 2, {}, 2},
               {"n2", {0, 1}, config::Contact::Transverse, 2, {}, 2}};
    d.symmetries = {{{0, 1}, {1, 0}}};
    return d;
}

/// Conic tangent to the image line of a genus-3 double cover, at a branch point.
inline config::DivisorSpec divisor_Q() {
    config::DivisorSpec d;
    d.name = "Q";
    d.components = {detail::simple("c", config::ImageKind::Conic), detail::double_line("l", 8)};
    d.nodes = {{"n", {0, 1}, config::Contact::Tangent, 3, {1}, 1}};
    return d;
}

/// Canonical quadruple cover of a line: 12 branch points, with the class of
/// the condition equal to iota / 11 times the collision divisor.
inline config::DivisorSpec divisor_I() {
    config::DivisorSpec d;
    d.name = "I";
    const int branch = 12;
    config::ModuliClass cls{LinForm::symbol(Symbol::Iota, Rational(1, branch - 1)), LinForm()};
    d.components = {{"l", config::ImageKind::Line, 4, branch, cls, 1}};
    return d;
}

/// Pointed canonical triple cover of a line (10 branch points, marked point u
/// over the node) joined to a line m.
inline config::DivisorSpec divisor_T(CenteredPencil mode = CenteredPencil::Constant) {
    config::DivisorSpec d;
    d.name = "T";
    const int branch = 10;
    // With all branch points fixed and u moving, the condition meets the family
    // in every connected cover: branch * marked = covers.
    const Rational marked = hurwitz::connected_cover_count(3, branch) / branch;
    LinForm per_branch = (LinForm::symbol(Symbol::Tau) - LinForm(marked)) * Rational(1, branch - 1);
    d.components = {{"l", config::ImageKind::Line, 3, branch, config::ModuliClass{per_branch, LinForm(marked)}, 1},
                    detail::simple("m", config::ImageKind::Line)};
    d.nodes = {{"u", {0, 1}, config::Contact::Transverse, 2, {}, 1}};
    if (mode == CenteredPencil::Constant) d.centered_pencil_value = LinForm(kCenteredPencilConstant);
    return d;
}

inline config::DivisorSpec divisor_spec(DivisorId id, CenteredPencil mode = CenteredPencil::Constant) {
    switch (id) {
        case DivisorId::H: return divisor_H();
        case DivisorId::I: return divisor_I();
        case DivisorId::T: return divisor_T(mode);
        case DivisorId::P: return divisor_P();
        case DivisorId::Q: return divisor_Q();
        case DivisorId::X: return divisor_X();
        case DivisorId::Y: return divisor_Y();
        case DivisorId::Delta0: break;
    }
    throw std::invalid_argument("Delta0 has no configuration model");
}

// ---------------------------------------------------------------------------
// Delta0

/// Characteristic numbers of the irreducible nodal divisor, index = a.
inline const std::array<Integer, kColumnSize>& delta0_column_data() {
    static const std::array<Integer, kColumnSize> data = {
        Integer("74651593680"), Integer("23328812592"), Integer("5919651072"), Integer("1268876232"),
        Integer("242612208"),   Integer("43393596"),    Integer("7453872"),    Integer("1256352"),
        Integer("209952"),      Integer("34992"),       Integer("5832"),       Integer("972"),
        Integer("162"),         Integer("27"),
    };
    return data;
}

/// Genus-two degree-four characteristic numbers for one split: all curves,
/// curves with a node on a given line, curves with a node at a given point.
struct Genus2Row {
    int a = 0;
    Integer n;
    Integer n_line;
    Integer n_point;
};

/// Delta0 entry from genus-two data: the node contributes multiplicity 2 per
/// line through it.
inline Integer delta0_from_genus2(const Genus2Row& r) {
    const int b = kConditions - r.a;
    return r.n + 2 * binomial(b, 1) * r.n_line + 4 * binomial(b, 2) * r.n_point;
}

struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {
inline std::pair<int, int> line_col(const std::string& text, std::size_t byte) {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

inline Integer nonnegative_field(const nlohmann::json& row, const std::string& key, const std::string& where) {
    if (!row.contains(key)) throw DataError(where + "." + key + ": missing field");
    const auto& v = row.at(key);
    Integer out;
    if (v.is_string()) {
        try {
            out = parse_integer(v.get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw DataError(where + "." + key + ": " + e.what());
        }
    } else if (v.is_number_integer()) {
        out = v.is_number_unsigned() ? Integer(v.get<std::uint64_t>()) : Integer(v.get<std::int64_t>());
    } else {
        throw DataError(where + "." + key + ": expected an integer or a decimal string");
    }
    if (out < 0) throw DataError(where + "." + key + ": negative value " + out.str());
    return out;
}
}  // namespace detail

/// Parses {"schema_version": 1, "rows": [{"a": 0, "N": ..., "N_L": ..., "N_p": ...}, ...]}
/// with exactly one row for every a in 0..13. Errors name the offending line or field.
inline std::vector<Genus2Row> parse_genus2_data(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        auto [line, col] = detail::line_col(text, e.byte == 0 ? 0 : e.byte - 1);
        throw DataError("genus-2 data: JSON syntax error at line " + std::to_string(line) + ", column " +
                        std::to_string(col));
    }
    if (!doc.is_object()) throw DataError("genus-2 data: top level must be an object");
    if (!doc.contains("schema_version") || doc["schema_version"] != 1)
        throw DataError("genus-2 data: schema_version must be 1");
    if (!doc.contains("rows") || !doc["rows"].is_array()) throw DataError("genus-2 data: rows must be an array");
    const auto& rows = doc["rows"];
    if (rows.size() != kColumnSize)
        throw DataError("genus-2 data: rows has " + std::to_string(rows.size()) + " entries, expected 14");

    std::vector<Genus2Row> out(kColumnSize);
    std::array<bool, kColumnSize> seen{};
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const std::string where = "rows[" + std::to_string(i) + "]";
        const auto& r = rows[i];
        if (!r.is_object()) throw DataError(where + ": expected an object");
        if (!r.contains("a") || !r["a"].is_number_integer()) throw DataError(where + ".a: expected an integer");
        const auto a = r["a"].get<std::int64_t>();
        if (a < 0 || a > kConditions) throw DataError(where + ".a: " + std::to_string(a) + " outside 0..13");
        if (seen[a]) throw DataError(where + ".a: duplicate split " + std::to_string(a));
        seen[a] = true;
        out[a] = {static_cast<int>(a), detail::nonnegative_field(r, "N", where),
                  detail::nonnegative_field(r, "N_L", where), detail::nonnegative_field(r, "N_p", where)};
    }
    return out;
}

// ---------------------------------------------------------------------------
// Columns

inline config::Column enumerate(DivisorId id, int a, CenteredPencil mode = CenteredPencil::Constant) {
    return config::enumerate(divisor_spec(id, mode), a);
}

inline LinForm entry(DivisorId id, int a, CenteredPencil mode = CenteredPencil::Constant) {
    if (a < 0 || a > kConditions) throw std::invalid_argument("a outside 0..13");
    if (id == DivisorId::Delta0) return LinForm(delta0_column_data()[a]);
    return enumerate(id, a, mode).total;
}

inline DivisorColumn column(DivisorId id, CenteredPencil mode = CenteredPencil::Constant) {
    DivisorColumn c{id, {}};
    for (int a = 0; a <= kConditions; ++a) c.entries[a] = entry(id, a, mode);
    return c;
}

/// Delta0 recomputed from external genus-two data (one row per a).
inline DivisorColumn column_Delta0(const std::vector<Genus2Row>& rows) {
    if (rows.size() != kColumnSize) throw std::invalid_argument("genus-2 data needs 14 rows");
    DivisorColumn c{DivisorId::Delta0, {}};
    for (const auto& r : rows) c.entries.at(r.a) = LinForm(delta0_from_genus2(r));
    return c;
}

inline Integer column_Delta0(int a) { return to_integer(entry(DivisorId::Delta0, a).constant()); }
inline Integer column_H(int a) { return to_integer(entry(DivisorId::H, a).constant()); }
inline Integer column_P(int a) { return to_integer(entry(DivisorId::P, a).constant()); }
inline Integer column_Q(int a) { return to_integer(entry(DivisorId::Q, a).constant()); }
inline Integer column_X(int a) { return to_integer(entry(DivisorId::X, a).constant()); }
inline Integer column_Y(int a) { return to_integer(entry(DivisorId::Y, a).constant()); }
inline LinForm column_I(int a) { return entry(DivisorId::I, a); }
inline LinForm column_T(int a, CenteredPencil mode = CenteredPencil::Constant) { return entry(DivisorId::T, a, mode); }

using Columns = std::array<DivisorColumn, 8>;  // in kAllDivisors order

inline Columns all_columns(CenteredPencil mode = CenteredPencil::Constant) {
    Columns out;
    for (std::size_t i = 0; i < kAllDivisors.size(); ++i) out[i] = column(kAllDivisors[i], mode);
    return out;
}

}  // namespace charnum::quartic
