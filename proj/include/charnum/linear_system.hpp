#pragma once

#include "charnum/linform.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace charnum {

/// A list of rows, each a LinForm constrained to equal zero.
struct LinearSystem {
    struct Row {
        LinForm form;
        std::string label;
    };
    std::vector<Row> rows;

    void add(LinForm form, std::string label) { rows.push_back({std::move(form), std::move(label)}); }

    /// Every symbol mentioned by some row, in the global symbol order.
    std::vector<Symbol> unknowns() const {
        std::set<Symbol> seen;
        for (const auto& r : rows)
            for (const auto& [s, c] : r.form.terms()) seen.insert(s);
        return {seen.begin(), seen.end()};
    }
};

enum class SolveStatus { Unique, Inconsistent, Underdetermined };

inline std::string to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::Unique: return "UNIQUE";
        case SolveStatus::Inconsistent: return "INCONSISTENT";
        case SolveStatus::Underdetermined: return "UNDERDETERMINED";
    }
    return "?";
}

struct SolveDiagnostics {
    std::size_t rows = 0;
    std::size_t unknowns = 0;
    std::size_t rank = 0;
    std::vector<std::size_t> redundant_rows;     // reduced to 0 = 0
    std::vector<std::size_t> inconsistent_rows;  // reduced to c = 0 with c != 0
    bool consistent = true;
    bool unique = false;
};

struct SolveResult {
    SolveStatus status = SolveStatus::Inconsistent;
    SolveDiagnostics diagnostics;
    /// Unique solution, or for an underdetermined system the particular solution
    /// with every free symbol set to zero.
    std::map<Symbol, Rational> solution;
    std::vector<Symbol> free_symbols;
    /// One kernel vector per free symbol (that symbol set to 1).
    std::vector<std::map<Symbol, Rational>> kernel_basis;

    std::optional<std::size_t> first_inconsistent_row() const {
        if (diagnostics.inconsistent_rows.empty()) return std::nullopt;
        return diagnostics.inconsistent_rows.front();
    }
};

/// Exact Gauss-Jordan elimination, one row at a time. Each incoming row is
/// reduced against the current pivots: a residual 0 = 0 is recorded as a
/// redundant row, a residual c = 0 (c != 0) as an inconsistent row.
inline SolveResult solve_exact(const LinearSystem& system) {
    if (system.rows.empty()) throw std::invalid_argument("solve_exact: empty system");

    const std::vector<Symbol> unknowns = system.unknowns();
    const std::size_t n = unknowns.size();
    std::map<Symbol, std::size_t> column;
    for (std::size_t j = 0; j < n; ++j) column[unknowns[j]] = j;

    // Dense row: coefficients in [0, n), constant at index n.
    using Dense = std::vector<Rational>;
    struct Pivot {
        std::size_t col;
        Dense row;  // normalized: row[col] == 1, zero in every other pivot column
    };
    std::vector<Pivot> pivots;

    SolveResult result;
    result.diagnostics.rows = system.rows.size();
    result.diagnostics.unknowns = n;

    for (std::size_t i = 0; i < system.rows.size(); ++i) {
        Dense r(n + 1);
        for (const auto& [s, c] : system.rows[i].form.terms()) r[column.at(s)] = c;
        r[n] = system.rows[i].form.constant();

        for (const auto& p : pivots) {
            if (r[p.col] == 0) continue;
            Rational f = r[p.col];
            for (std::size_t j = 0; j <= n; ++j) {
                if (p.row[j] != 0) r[j] -= f * p.row[j];
            }
        }

        std::size_t lead = n;
        for (std::size_t j = 0; j < n; ++j) {
            if (r[j] != 0) {
                lead = j;
                break;
            }
        }
        if (lead == n) {
            if (r[n] == 0) {
                result.diagnostics.redundant_rows.push_back(i);
            } else {
                result.diagnostics.inconsistent_rows.push_back(i);
            }
            continue;
        }

        Rational inv = Rational(1) / r[lead];
        for (auto& x : r) x *= inv;
        for (auto& p : pivots) {
            if (p.row[lead] == 0) continue;
            Rational f = p.row[lead];
            for (std::size_t j = 0; j <= n; ++j) {
                if (r[j] != 0) p.row[j] -= f * r[j];
            }
        }
        pivots.push_back({lead, std::move(r)});
    }

    auto& d = result.diagnostics;
    d.rank = pivots.size();
    d.consistent = d.inconsistent_rows.empty();
    d.unique = d.consistent && d.rank == n;

    if (!d.consistent) {
        result.status = SolveStatus::Inconsistent;
        return result;
    }

    std::vector<bool> is_pivot(n, false);
    for (const auto& p : pivots) is_pivot[p.col] = true;
    for (std::size_t j = 0; j < n; ++j)
        if (!is_pivot[j]) result.free_symbols.push_back(unknowns[j]);

    // Pivot row: x_col + sum_{free} c_f x_f + const = 0.
    for (const auto& p : pivots) result.solution[unknowns[p.col]] = -p.row[n];
    for (Symbol f : result.free_symbols) {
        result.solution[f] = 0;
        std::map<Symbol, Rational> k;
        k[f] = 1;
        std::size_t fc = column.at(f);
        for (const auto& p : pivots)
            if (p.row[fc] != 0) k[unknowns[p.col]] = -p.row[fc];
        result.kernel_basis.push_back(std::move(k));
    }

    result.status = d.unique ? SolveStatus::Unique : SolveStatus::Underdetermined;
    return result;
}

}  // namespace charnum
