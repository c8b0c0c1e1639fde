#pragma once

// Command-line front end. run() is the whole program minus process plumbing,
// so tests drive it in-process.

#include "charnum/conics.hpp"
#include "charnum/cubics.hpp"
#include "charnum/hurwitz.hpp"
#include "charnum/quartic_solver.hpp"
#include "charnum/reference.hpp"
#include "charnum/report.hpp"
#include "charnum/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace charnum::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerification = 2;

using report::Json;

struct TextTable {
    std::string title;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

struct Output {
    report::Report report;
    std::vector<TextTable> tables;
    int exit_code = kExitOk;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Rendering

inline void render_text(const Output& o, std::ostream& out) {
    bool first = true;
    for (const auto& t : o.tables) {
        if (!first) out << "\n";
        first = false;
        if (!t.title.empty()) out << t.title << "\n";
        std::vector<std::size_t> width(t.header.size(), 0);
        for (std::size_t i = 0; i < t.header.size(); ++i) width[i] = t.header[i].size();
        for (const auto& r : t.rows)
            for (std::size_t i = 0; i < r.size() && i < width.size(); ++i) width[i] = std::max(width[i], r[i].size());
        auto line = [&](const std::vector<std::string>& cells) {
            std::string s;
            for (std::size_t i = 0; i < cells.size(); ++i) {
                if (i) s += "  ";
                s += cells[i];
                if (i + 1 < cells.size()) s += std::string(width[i] - cells[i].size(), ' ');
            }
            out << s << "\n";
        };
        line(t.header);
        for (const auto& r : t.rows) line(r);
    }
    if (!o.report.checks.empty()) {
        if (!first) out << "\n";
        for (const auto& c : o.report.checks)
            out << (c.passed ? "PASS " : "FAIL ") << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
    }
    if (o.report.timing_us) out << "\ntime: " << *o.report.timing_us << " us\n";
}

inline std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

/// One CSV block per table, blocks separated by a blank line.
inline void render_csv(const Output& o, std::ostream& out) {
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << csv_cell(cells[i]);
        out << "\n";
    };
    bool first = true;
    for (const auto& t : o.tables) {
        if (!first) out << "\n";
        first = false;
        line(t.header);
        for (const auto& r : t.rows) line(r);
    }
    if (!o.report.checks.empty()) {
        if (!first) out << "\n";
        line({"check", "passed", "detail"});
        for (const auto& c : o.report.checks) line({c.name, c.passed ? "true" : "false", c.detail});
    }
}

// ---------------------------------------------------------------------------
// Commands

inline Output cmd_conics() {
    Output o;
    o.report.command = "conics";
    TextTable t{"conics through a points, tangent to b lines", {"a", "b", "count"}, {}};
    TextTable f{"conics tangent to a line at a given point, through a points, tangent to b lines", {"a", "b", "count"}, {}};
    Json rows = Json::array(), flags = Json::array();
    for (int a = 5; a >= 0; --a) {
        auto v = conics::conic_char(a, 5 - a).str();
        t.rows.push_back({std::to_string(a), std::to_string(5 - a), v});
        rows.push_back({{"points", a}, {"lines", 5 - a}, {"count", v}});
    }
    for (int a = 3; a >= 0; --a) {
        auto v = conics::flag_conic_char(a, 3 - a).str();
        f.rows.push_back({std::to_string(a), std::to_string(3 - a), v});
        flags.push_back({{"points", a}, {"lines", 3 - a}, {"count", v}});
    }
    o.report.outputs = {{"conics", rows}, {"flag_conics", flags}};
    o.tables = {t, f};
    return o;
}

inline std::string tag(bool data_backed) { return data_backed ? "data-backed" : "derived"; }

inline Json cases_json(const config::DivisorSpec& spec, const config::Column& col, TextTable& table, const std::string& div,
                       int a) {
    Json arr = Json::array();
    auto cs = config::cases(spec, col);
    for (std::size_t i = 0; i < cs.size(); ++i) {
        const auto& c = cs[i];
        const auto desc = config::describe(spec, c.representative);
        arr.push_back({{"case", i + 1},
                       {"configuration", desc},
                       {"labeled_configurations", c.members.size()},
                       {"resolution", config::to_string(c.resolution)},
                       {"subtotal", report::linform_json(c.subtotal)},
                       {"tag", tag(c.data_backed)}});
        table.rows.push_back({div, std::to_string(a), std::to_string(i + 1), desc, config::to_string(c.resolution),
                              c.subtotal.str(), tag(c.data_backed)});
    }
    return arr;
}

inline TextTable breakdown_table() {
    return {"case breakdown", {"divisor", "a", "case", "configuration", "resolution", "subtotal", "tag"}, {}};
}

inline Output cmd_cubics(bool breakdown) {
    Output o;
    o.report.command = "cubics";
    o.report.inputs = {{"breakdown", breakdown}};
    const auto& ref = reference::data();
    auto status = [](const reference::Located& l, int a) {
        return l.values.count(a) ? std::string("confirmed by reference data") : std::string("derived, unconfirmed by reference data");
    };

    TextTable div{"cubic boundary divisors alpha^a beta^(8-a)", {"a", "b", "I", "T", "I status", "T status"}, {}};
    TextTable br = breakdown_table();
    Json divs = Json::array(), cases = Json::array();
    for (int a = 0; a <= cubic::kConditions; ++a) {
        const int b = cubic::kConditions - a;
        auto ci = cubic::column_I(a, b);
        auto ct = cubic::column_T(a, b);
        const auto vi = ci.total.str(), vt = ct.total.str();
        div.rows.push_back({std::to_string(a), std::to_string(b), vi, vt, status(ref.cubic_I, a), status(ref.cubic_T, a)});
        divs.push_back({{"a", a}, {"b", b}, {"I", vi}, {"T", vt}, {"I_status", status(ref.cubic_I, a)},
                        {"T_status", status(ref.cubic_T, a)}});
        if (breakdown) {
            auto si = cubic::divisor_I();
            auto st = cubic::divisor_T();
            if (!ci.terms.empty()) cases.push_back({{"divisor", "I"}, {"a", a}, {"cases", cases_json(si, ci, br, "I", a)}});
            if (!ct.terms.empty()) cases.push_back({{"divisor", "T"}, {"a", a}, {"cases", cases_json(st, ct, br, "T", a)}});
        }
    }

    auto nums = cubic::cubic_char_numbers();
    TextTable rec{"recursion C_a = 4 C_{a+1} - 2 T_a - 6 I_a", {"a", "C_{a+1}", "T_a", "I_a", "C_a"}, {}};
    Json steps = Json::array();
    for (const auto& s : nums.steps) {
        rec.rows.push_back({std::to_string(s.a), s.next.str(), s.t.str(), s.i.str(), s.value.str()});
        steps.push_back({{"a", s.a}, {"next", s.next.str()}, {"T", s.t.str()}, {"I", s.i.str()}, {"value", s.value.str()}});
    }
    TextTable cn{"smooth cubics through a points, tangent to 9-a lines", {"a", "count"}, {}};
    Json vec = Json::array();
    for (int a = cubic::kCharConditions; a >= 0; --a) {
        cn.rows.push_back({std::to_string(a), nums.values[a].str()});
        vec.push_back({{"a", a}, {"value", nums.values[a].str()}});
    }
    o.report.outputs = {{"divisors", divs}, {"recursion", steps}, {"char_numbers", vec}};
    o.tables = {div};
    if (breakdown) {
        o.report.outputs["breakdown"] = cases;
        o.tables.push_back(br);
    }
    o.tables.push_back(rec);
    o.tables.push_back(cn);
    return o;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline Output cmd_divisors(const std::optional<std::string>& divisor, bool breakdown,
                           const std::optional<std::string>& genus2, bool symbolic_t) {
    Output o;
    o.report.command = "quartics divisors";
    o.report.inputs = {{"divisor", divisor ? Json(*divisor) : Json(nullptr)},
                       {"breakdown", breakdown},
                       {"genus2_data", genus2 ? Json(*genus2) : Json(nullptr)},
                       {"symbolic_t", symbolic_t}};
    const auto mode = symbolic_t ? quartic::CenteredPencil::Symbolic : quartic::CenteredPencil::Constant;

    std::vector<quartic::DivisorId> ids;
    if (divisor) {
        try {
            ids.push_back(quartic::parse_divisor(*divisor));
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    } else {
        ids.assign(quartic::kAllDivisors.begin(), quartic::kAllDivisors.end());
    }

    TextTable t{"boundary divisors alpha^a beta^(13-a)", {"a"}, {}};
    for (auto id : ids) t.header.push_back(quartic::divisor_name(id));
    TextTable br = breakdown_table();
    Json cols = Json::object(), cases = Json::array();
    std::vector<quartic::DivisorColumn> computed;
    for (auto id : ids) {
        quartic::DivisorColumn col{id, {}};
        Json arr = Json::array();
        for (int a = 0; a < quartic::kColumnSize; ++a) {
            if (id == quartic::DivisorId::Delta0) {
                col.entries[a] = quartic::entry(id, a);
            } else {
                auto spec = quartic::divisor_spec(id, mode);
                auto c = config::enumerate(spec, a);
                col.entries[a] = c.total;
                if (breakdown && !c.terms.empty())
                    cases.push_back({{"divisor", quartic::divisor_name(id)}, {"a", a},
                                     {"cases", cases_json(spec, c, br, quartic::divisor_name(id), a)}});
            }
            arr.push_back(report::linform_json(col.entries[a]));
        }
        cols[quartic::divisor_name(id)] = arr;
        computed.push_back(col);
    }
    for (int a = quartic::kConditions; a >= 0; --a) {
        std::vector<std::string> row{std::to_string(a)};
        for (const auto& c : computed) row.push_back(c.entries[a].str());
        t.rows.push_back(row);
    }
    o.report.outputs = {{"columns", cols}};
    o.tables = {t};
    if (breakdown) {
        o.report.outputs["breakdown"] = cases;
        o.tables.push_back(br);
    }

    // Exact comparison against the embedded reference columns.
    const auto ref = reference::boundary_reference();
    for (const auto& c : computed) {
        if (symbolic_t && c.divisor == quartic::DivisorId::T) continue;  // differs from the reference by design
        reference::Table got{"computed", {}}, want{ref.location, {}};
        for (int a = 0; a < quartic::kColumnSize; ++a) {
            got.entries.emplace_back(reference::boundary_key(c.divisor, a), c.entries[a]);
            want.entries.emplace_back(reference::boundary_key(c.divisor, a), reference::data().boundary.at(c.divisor)[a]);
        }
        o.report.checks.push_back(verify::detail::from_diff("boundary column " + quartic::divisor_name(c.divisor),
                                                           reference::emit_reference_diff(got, want)));
    }

    if (genus2) {
        std::vector<quartic::Genus2Row> rows;
        try {
            rows = quartic::parse_genus2_data(read_file(*genus2));
        } catch (const quartic::DataError& e) {
            throw UsageError(*genus2 + ": " + e.what());
        }
        auto col = quartic::column_Delta0(rows);
        TextTable g{"Delta0 from genus-2 data", {"a", "N", "N_L", "N_p", "Delta0", "embedded"}, {}};
        Json arr = Json::array();
        for (int a = quartic::kConditions; a >= 0; --a) {
            const auto& r = rows[a];
            const auto v = col.entries[a].str();
            const auto e = quartic::delta0_column_data()[a].str();
            g.rows.push_back({std::to_string(a), r.n.str(), r.n_line.str(), r.n_point.str(), v, e});
            arr.push_back({{"a", a}, {"N", r.n.str()}, {"N_L", r.n_line.str()}, {"N_p", r.n_point.str()}, {"Delta0", v},
                           {"embedded", e}});
        }
        o.report.outputs["delta0_from_genus2"] = arr;
        o.tables.push_back(g);
    }
    o.exit_code = o.report.all_passed() ? kExitOk : kExitVerification;
    return o;
}

inline Json system_json(const LinearSystem& sys) {
    Json rows = Json::array();
    for (const auto& r : sys.rows) {
        Json coeffs = Json::object();
        for (const auto& [s, c] : r.form.terms()) coeffs[symbol_name(s)] = to_string(c);
        rows.push_back({{"label", r.label}, {"constant", to_string(r.form.constant())}, {"coefficients", coeffs}});
    }
    return rows;
}

inline Output cmd_solve(bool symbolic_t) {
    Output o;
    o.report.command = "quartics solve";
    o.report.inputs = {{"symbolic_t", symbolic_t}};
    const auto mode = symbolic_t ? quartic::CenteredPencil::Symbolic : quartic::CenteredPencil::Constant;
    const auto sys = quartic::assemble_system(quartic::all_columns(mode));
    o.report.outputs["rows"] = system_json(sys);

    const auto res = solve_exact(sys);
    o.report.outputs["status"] = to_string(res.status);
    o.report.outputs["diagnostics"] = report::diagnostics_json(res.diagnostics);
    TextTable diag{"diagnostics", {"rows", "unknowns", "rank", "redundant", "consistent", "unique"}, {}};
    const auto& d = res.diagnostics;
    diag.rows.push_back({std::to_string(d.rows), std::to_string(d.unknowns), std::to_string(d.rank),
                         std::to_string(d.redundant_rows.size()), d.consistent ? "yes" : "no", d.unique ? "yes" : "no"});

    try {
        const auto sol = quartic::solve(sys);
        TextTable unk{"auxiliary unknowns", {"symbol", "value"}, {}};
        Json u = Json::object();
        for (const auto& [s, v] : sol.unknowns) {
            unk.rows.push_back({symbol_name(s), to_string(v)});
            u[symbol_name(s)] = to_string(v);
        }
        TextTable cn{"smooth quartics through a points, tangent to 14-a lines", {"a", "count"}, {}};
        Json arr = Json::array();
        for (int a = 14; a >= 0; --a) {
            cn.rows.push_back({std::to_string(a), sol.char_numbers[a].str()});
            arr.push_back(sol.char_numbers[a].str());
        }
        o.report.outputs["unknowns"] = u;
        o.report.outputs["char_numbers"] = arr;  // a = 14 down to 0
        o.tables = {cn, unk, diag};

        const auto& ref = reference::data();
        o.report.checks.push_back(verify::detail::from_diff(
            "quartic characteristic numbers",
            reference::emit_reference_diff(
                reference::split_table_like(ref.quartic_numbers, [&](int a) { return sol.char_numbers[a]; }),
                reference::split_table(ref.quartic_numbers))));
        for (const auto& [s, v] : ref.unknowns)
            o.report.checks.push_back(verify::detail::check_equal("unknown " + symbol_name(s), ref.unknowns_location,
                                                             to_string(sol.unknowns.at(s)), to_string(v)));
    } catch (const quartic::SolveError& e) {
        o.tables = {diag};
        o.report.checks.push_back({"quartic system", false, e.what()});
    }
    o.exit_code = o.report.all_passed() ? kExitOk : kExitVerification;
    return o;
}

inline Output cmd_hurwitz(int d, int b, const std::string& method) {
    Output o;
    o.report.command = "hurwitz";
    o.report.inputs = {{"degree", d}, {"branch_points", b}, {"method", method}};
    TextTable t{"covers of degree " + std::to_string(d) + " with " + std::to_string(b) + " simple branch points",
                {"method", "raw_tuples", "connected_tuples", "covers"}, {}};
    Json arr = Json::array();
    std::vector<hurwitz::CoverCount> results;
    try {
        if (method == "classalg" || method == "both") results.push_back(hurwitz::cover_count(d, b));
        if (method == "enum" || method == "both") results.push_back(hurwitz::enumerate_covers(d, b));
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const char* names[] = {method == "enum" ? "enum" : "classalg", "enum"};
    for (std::size_t i = 0; i < results.size(); ++i) {
        const auto& r = results[i];
        t.rows.push_back({names[i], r.raw_tuples.str(), r.connected_tuples.str(), to_string(r.covers)});
        arr.push_back({{"method", names[i]},
                       {"raw_tuples", r.raw_tuples.str()},
                       {"connected_tuples", r.connected_tuples.str()},
                       {"covers", to_string(r.covers)}});
    }
    o.report.outputs = {{"results", arr}};
    if (results.size() == 2) {
        bool same = results[0].raw_tuples == results[1].raw_tuples &&
                    results[0].connected_tuples == results[1].connected_tuples;
        o.report.checks.push_back({"class algebra agrees with enumeration", same, ""});
    }
    o.tables = {t};
    o.exit_code = o.report.all_passed() ? kExitOk : kExitVerification;
    return o;
}

inline Output cmd_verify() {
    Output o;
    o.report.command = "verify";
    o.report.checks = verify::run_checks();
    int passed = 0;
    for (const auto& c : o.report.checks) passed += c.passed;
    o.report.outputs = {{"passed", passed}, {"total", o.report.checks.size()}};
    o.exit_code = o.report.all_passed() ? kExitOk : kExitVerification;
    return o;
}

// ---------------------------------------------------------------------------
// Entry point

/// Runs one command line (args excludes the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Characteristic numbers of plane conics, cubics and quartics by exact enumeration", "charnum"};
    app.require_subcommand(1);
    std::string format = "text";
    bool timing = false;
    app.add_option("--format", format, "Output encoding")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_flag("--timing", timing, "Report wall-clock time");

    auto* conics_cmd = app.add_subcommand("conics", "Characteristic numbers of smooth conics")->fallthrough();

    bool cubic_breakdown = false;
    auto* cubics_cmd = app.add_subcommand("cubics", "Cubic divisor numbers and the cubic recursion")->fallthrough();
    cubics_cmd->add_flag("--breakdown", cubic_breakdown, "List configuration cases");

    auto* quartics_cmd = app.add_subcommand("quartics", "Quartic boundary divisors and the linear system")->fallthrough();
    quartics_cmd->require_subcommand(1);
    std::optional<std::string> divisor, genus2, report_file;
    bool div_breakdown = false, symbolic_t = false;
    auto* divisors_cmd = quartics_cmd->add_subcommand("divisors", "Boundary divisor columns")->fallthrough();
    divisors_cmd->add_option("--divisor", divisor, "One of Delta0, H, I, T, P, Q, X, Y");
    divisors_cmd->add_flag("--breakdown", div_breakdown, "List configuration cases");
    divisors_cmd->add_option("--genus2-data", genus2, "JSON file with genus-2 inputs for Delta0");
    divisors_cmd->add_flag("--symbolic-t", symbolic_t, "Keep the centered-pencil family of T symbolic in tau");
    auto* solve_cmd = quartics_cmd->add_subcommand("solve", "Solve the quartic system")->fallthrough();
    solve_cmd->add_option("--report", report_file, "Write the full JSON report to this file");
    solve_cmd->add_flag("--symbolic-t", symbolic_t, "Keep the centered-pencil family of T symbolic in tau");

    int degree = 0, branch = 0;
    std::string method = "classalg";
    auto* hurwitz_cmd = app.add_subcommand("hurwitz", "Count simply branched covers of the line")->fallthrough();
    hurwitz_cmd->add_option("--degree", degree, "Cover degree (1..6)")->required();
    hurwitz_cmd->add_option("--branch-points", branch, "Number of simple branch points")->required();
    hurwitz_cmd->add_option("--method", method, "Counting backend")->check(CLI::IsMember({"enum", "classalg", "both"}));

    auto* verify_cmd = app.add_subcommand("verify", "Recompute and compare every reference value")->fallthrough();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
            app.exit(e, out, err);
            return kExitOk;
        }
        err << "error: " << e.what() << "\n" << "run with --help for usage\n";
        return kExitUsage;
    }

    const auto start = std::chrono::steady_clock::now();
    Output o;
    try {
        if (*conics_cmd) {
            o = cmd_conics();
        } else if (*cubics_cmd) {
            o = cmd_cubics(cubic_breakdown);
        } else if (*divisors_cmd) {
            o = cmd_divisors(divisor, div_breakdown, genus2, symbolic_t);
        } else if (*solve_cmd) {
            o = cmd_solve(symbolic_t);
        } else if (*hurwitz_cmd) {
            o = cmd_hurwitz(degree, branch, method);
        } else if (*verify_cmd) {
            o = cmd_verify();
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    if (timing) {
        o.report.timing_us =
            std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start).count();
    }
    if (report_file) {
        std::ofstream f(*report_file);
        if (!f) {
            err << "error: cannot write " << *report_file << "\n";
            return kExitUsage;
        }
        f << report::emit(o.report) << "\n";
    }

    if (format == "json") {
        out << report::emit(o.report) << "\n";
    } else if (format == "csv") {
        render_csv(o, out);
    } else {
        render_text(o, out);
    }
    for (const auto& c : o.report.checks)
        if (!c.passed && format != "text") err << "FAIL " << c.name << ": " << c.detail << "\n";
    return o.exit_code;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    return run(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

}  // namespace charnum::cli
