#pragma once

// Recomputes every value listed in the embedded reference data and compares
// exactly.

#include "charnum/cubics.hpp"
#include "charnum/hurwitz.hpp"
#include "charnum/quartic_solver.hpp"
#include "charnum/reference.hpp"
#include "charnum/report.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace charnum::verify {

using report::Check;

namespace detail {
inline Check from_diff(std::string name, const std::vector<reference::Mismatch>& diff) {
    Check c{std::move(name), diff.empty(), ""};
    for (const auto& m : diff) {
        if (!c.detail.empty()) c.detail += "; ";
        c.detail += m.location + ": computed " + m.computed + ", expected " + m.expected;
    }
    return c;
}

inline Check check_equal(std::string name, const std::string& location, const std::string& computed, const std::string& expected) {
    bool ok = computed == expected;
    return {std::move(name), ok, ok ? "" : location + ": computed " + computed + ", expected " + expected};
}
}  // namespace detail

/// Orbit subtotals of one divisor column at one split, in enumeration order.
inline std::vector<Integer> case_subtotals(quartic::DivisorId id, int a) {
    auto spec = quartic::divisor_spec(id);
    auto col = config::enumerate(spec, a);
    std::vector<Integer> out;
    for (const auto& c : config::cases(spec, col)) out.push_back(to_integer(c.subtotal.constant()));
    return out;
}

inline std::vector<Check> run_checks(const reference::ReferenceData& ref = reference::data()) {
    std::vector<Check> out;
    using detail::check_equal;

    out.push_back(check_equal("binomial(8,4)", "combinatorics", binomial(8, 4).str(), "70"));
    out.push_back(check_equal("binomial(13,2)", "combinatorics", binomial(13, 2).str(), "78"));
    out.push_back(check_equal("multinomial(7;2,2,3)", "combinatorics", multinomial(7, {2, 2, 3}).str(), "210"));
    out.push_back(check_equal("multinomial(13;2,2,9)", "combinatorics", multinomial(13, {2, 2, 9}).str(), "4290"));

    for (const auto& cov : ref.covers) {
        const std::string tag = "(" + std::to_string(cov.degree) + "," + std::to_string(cov.branch_points) + ")";
        out.push_back(check_equal("connected covers " + tag, ref.covers_location,
                            to_string(hurwitz::connected_cover_count(cov.degree, cov.branch_points)), cov.value.str()));
        if (cov.degree == 3)
            out.push_back(check_equal("degree-3 closed form " + tag, ref.covers_location,
                                to_string(hurwitz::degree3_closed_form(cov.branch_points)), cov.value.str()));
    }

    auto cubic_numbers = cubic::cubic_char_numbers();
    out.push_back(detail::from_diff(
        "cubic divisor I",
        reference::emit_reference_diff(
            reference::split_table_like(ref.cubic_I, [](int a) { return cubic::cubic_I_char(a, 8 - a); }),
            reference::split_table(ref.cubic_I))));
    out.push_back(detail::from_diff(
        "cubic divisor T",
        reference::emit_reference_diff(
            reference::split_table_like(ref.cubic_T, [](int a) { return cubic::cubic_T_char(a, 8 - a); }),
            reference::split_table(ref.cubic_T))));
    out.push_back(detail::from_diff(
        "cubic characteristic numbers",
        reference::emit_reference_diff(
            reference::split_table_like(ref.cubic_numbers, [&](int a) { return cubic_numbers.values[a]; }),
            reference::split_table(ref.cubic_numbers))));

    const auto columns = quartic::all_columns();
    const auto computed = reference::boundary_table(columns);
    const auto expected = reference::boundary_reference(ref);
    for (auto id : quartic::kAllDivisors) {
        reference::Table c{computed.location, {}}, e{expected.location, {}};
        for (std::size_t i = 0; i < computed.entries.size(); ++i) {
            if (computed.entries[i].first.rfind("column " + quartic::divisor_name(id) + ",", 0) == 0) {
                c.entries.push_back(computed.entries[i]);
                e.entries.push_back(expected.entries[i]);
            }
        }
        out.push_back(detail::from_diff("boundary column " + quartic::divisor_name(id), reference::emit_reference_diff(c, e)));
    }

    for (const auto& cs : ref.case_subtotals) {
        auto got = case_subtotals(cs.divisor, cs.a);
        auto want = cs.subtotals;
        std::sort(got.begin(), got.end());
        std::sort(want.begin(), want.end());
        auto join = [](const std::vector<Integer>& v) {
            std::string s;
            for (const auto& x : v) s += (s.empty() ? "" : " ") + x.str();
            return s;
        };
        out.push_back(check_equal("case subtotals " + quartic::divisor_name(cs.divisor) + " a=" + std::to_string(cs.a),
                            cs.location, join(got), join(want)));
    }

    try {
        const auto sol = quartic::solve(quartic::assemble_system(columns));
        out.push_back(detail::from_diff(
            "quartic characteristic numbers",
            reference::emit_reference_diff(
                reference::split_table_like(ref.quartic_numbers, [&](int a) { return sol.char_numbers[a]; }),
                reference::split_table(ref.quartic_numbers))));
        for (const auto& [s, v] : ref.unknowns)
            out.push_back(check_equal("unknown " + symbol_name(s), ref.unknowns_location, to_string(sol.unknowns.at(s)), to_string(v)));
        out.push_back(check_equal("iota / 120", ref.iota_over_120_location,
                            to_string(Rational(sol.unknowns.at(Symbol::Iota) / 120)), ref.iota_over_120.str()));
        const auto& d = sol.diagnostics;
        out.push_back(check_equal("system shape rows x unknowns", "quartic system",
                            std::to_string(d.rows) + "x" + std::to_string(d.unknowns), "29x21"));
        out.push_back(check_equal("surplus rows redundant", "quartic system",
                            std::to_string(d.redundant_rows.size()) + " redundant, rank " + std::to_string(d.rank),
                            "8 redundant, rank 21"));
        const Rational tau = sol.unknowns.at(Symbol::Tau);
        out.push_back(check_equal("centered pencil constant", "boundary column T",
                            to_string(Rational(5 * tau - 1640)), std::to_string(quartic::kCenteredPencilConstant)));
    } catch (const quartic::SolveError& e) {
        out.push_back({"quartic system", false, e.what()});
    }

    for (const auto& [id, m] : ref.discriminant_multiplicities)
        out.push_back(check_equal("discriminant multiplicity " + quartic::divisor_name(id), ref.multiplicities_location,
                            quartic::discriminant_multiplicity(id).str(), m.str()));
    return out;
}

}  // namespace charnum::verify
