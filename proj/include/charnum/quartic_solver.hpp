#pragma once

// The two divisor relations on the space of quartics, intersected with every
// alpha^a beta^(13-a), give an overdetermined system in the characteristic
// numbers C_a = alpha^a beta^(14-a) and six auxiliary unknowns.

#include "charnum/linear_system.hpp"
#include "charnum/quartic_divisors.hpp"

#include <array>
#include <map>
#include <stdexcept>
#include <string>

namespace charnum::quartic {

/// Coefficients of one relation  k alpha = first + sum c_D D  where c_D is a
/// number or one of the unknown symbols.
struct Relation {
    std::string name;
    int alpha;
    std::map<DivisorId, LinForm> coefficients;  // the "first" divisor carries coefficient 1
};

/// 6 alpha = beta + 4H + 12I + 6T + 2P + qQ + 6X + yY
inline const Relation& tangency_relation() {
    static const Relation r{"tangency",
                            6,
                            {{DivisorId::H, 4},
                             {DivisorId::I, 12},
                             {DivisorId::T, 6},
                             {DivisorId::P, 2},
                             {DivisorId::Q, LinForm::symbol(Symbol::Q)},
                             {DivisorId::X, 6},
                             {DivisorId::Y, LinForm::symbol(Symbol::Y)}}};
    return r;
}

/// 27 alpha = Delta0 + 28H + 72I + 45T + 20P + q'Q + 48X + y'Y
inline const Relation& discriminant_relation() {
    static const Relation r{"discriminant",
                            27,
                            {{DivisorId::Delta0, 1},
                             {DivisorId::H, 28},
                             {DivisorId::I, 72},
                             {DivisorId::T, 45},
                             {DivisorId::P, 20},
                             {DivisorId::Q, LinForm::symbol(Symbol::QPrime)},
                             {DivisorId::X, 48},
                             {DivisorId::Y, LinForm::symbol(Symbol::YPrime)}}};
    return r;
}

namespace detail {
/// coeff * value where at most one of the two is non-constant.
inline LinForm product(const LinForm& coeff, const LinForm& value) {
    if (coeff.is_constant()) return value * coeff.constant();
    if (value.is_constant()) return coeff * value.constant();
    throw std::logic_error("relation would be nonlinear: (" + coeff.str() + ") * (" + value.str() + ")");
}

inline const DivisorColumn& find(const Columns& cols, DivisorId id) {
    for (const auto& c : cols)
        if (c.divisor == id) return c;
    throw std::invalid_argument("missing column for divisor " + divisor_name(id));
}
}  // namespace detail

inline std::string row_label(const Relation& r, int a) { return r.name + " relation, a=" + std::to_string(a); }
inline const std::string kAnchorLabel = "anchor C14 = 1";

/// For each a = 0..13 one row per relation (tangency first), then the anchor.
/// Rows read  k C_{a+1} - C_a [tangency only] - sum c_D D_a = 0.
inline LinearSystem assemble_system(const Columns& columns) {
    for (auto id : kAllDivisors) {
        int count = 0;
        for (const auto& c : columns) count += c.divisor == id;
        if (count != 1) throw std::invalid_argument("columns must contain divisor " + divisor_name(id) + " exactly once");
    }
    LinearSystem sys;
    for (int a = 0; a <= kConditions; ++a) {
        for (const Relation* rel : {&tangency_relation(), &discriminant_relation()}) {
            LinForm row = LinForm::symbol(char_symbol(a + 1), rel->alpha);
            if (rel == &tangency_relation()) row -= LinForm::symbol(char_symbol(a));
            for (const auto& [id, coeff] : rel->coefficients)
                row -= detail::product(coeff, detail::find(columns, id).entries[a]);
            sys.add(row, row_label(*rel, a));
        }
    }
    sys.add(LinForm::symbol(char_symbol(14)) - LinForm(1), kAnchorLabel);
    return sys;
}

struct QuarticSolution {
    std::array<Integer, 15> char_numbers;  // index = a
    std::map<Symbol, Rational> unknowns;   // q, q', y, y', iota, tau
    SolveDiagnostics diagnostics;
};

struct SolveError : std::runtime_error {
    SolveStatus status;
    std::string row;
    SolveError(SolveStatus s, std::string r, const std::string& msg)
        : std::runtime_error(msg), status(s), row(std::move(r)) {}
};

/// Solves an assembled system; throws SolveError naming the first offending row.
inline QuarticSolution solve(const LinearSystem& sys) {
    SolveResult res = solve_exact(sys);
    if (res.status == SolveStatus::Inconsistent) {
        const auto& label = sys.rows[*res.first_inconsistent_row()].label;
        throw SolveError(res.status, label, "INCONSISTENT: first contradicting row is \"" + label + "\"");
    }
    if (res.status == SolveStatus::Underdetermined) {
        std::string names;
        for (Symbol s : res.free_symbols) names += (names.empty() ? "" : ", ") + symbol_name(s);
        throw SolveError(res.status, names, "UNDERDETERMINED: free unknowns " + names);
    }
    QuarticSolution out;
    out.diagnostics = res.diagnostics;
    for (int a = 0; a <= 14; ++a) {
        auto it = res.solution.find(char_symbol(a));
        if (it == res.solution.end()) throw std::logic_error("C" + std::to_string(a) + " does not occur in the system");
        out.char_numbers[a] = to_integer(it->second);
    }
    for (auto s : {Symbol::Q, Symbol::QPrime, Symbol::Y, Symbol::YPrime, Symbol::Iota, Symbol::Tau})
        out.unknowns[s] = res.solution.at(s);
    return out;
}

inline QuarticSolution solve(CenteredPencil mode = CenteredPencil::Constant) {
    return solve(assemble_system(all_columns(mode)));
}

/// Multiplicity of the discriminant at the general point of a divisor: its
/// coefficient in the discriminant relation divided by the order of the
/// automorphism group of the general map.
inline Integer discriminant_multiplicity(DivisorId d) {
    int aut = 0;
    switch (d) {
        case DivisorId::H: aut = 2; break;
        case DivisorId::I: aut = 4; break;
        case DivisorId::T: aut = 3; break;
        case DivisorId::P: aut = 2; break;
        default:
            throw std::invalid_argument("discriminant multiplicity is defined for H, I, T and P, not " + divisor_name(d));
    }
    const LinForm& coeff = discriminant_relation().coefficients.at(d);
    return exact_div(to_integer(coeff.constant()), aut);
}

}  // namespace charnum::quartic
