#include "charnum/linear_system.hpp"
#include "generators.hpp"

#include <gtest/gtest.h>

using namespace charnum;
using charnum::testing::Gen;

namespace {
const Symbol x = Symbol::Q;
const Symbol y = Symbol::QPrime;

LinForm evaluate(const LinForm& f, const std::map<Symbol, Rational>& v) { return f.substitute(v); }
}  // namespace

TEST(SolveExact, RedundantPair) {
    LinearSystem s;
    s.add(LinForm::symbol(x) - LinForm(2), "x - 2");
    s.add(LinForm::symbol(x, 3) - LinForm(6), "3x - 6");
    auto r = solve_exact(s);
    EXPECT_EQ(r.status, SolveStatus::Unique);
    EXPECT_EQ(r.solution.at(x), 2);
    EXPECT_EQ(r.diagnostics.rank, 1u);
    EXPECT_EQ(r.diagnostics.redundant_rows, std::vector<std::size_t>{1});
    EXPECT_TRUE(r.diagnostics.consistent);
    EXPECT_TRUE(r.diagnostics.unique);
}

TEST(SolveExact, Underdetermined) {
    LinearSystem s;
    s.add(LinForm::symbol(x) + LinForm::symbol(y) - LinForm(1), "x + y - 1");
    auto r = solve_exact(s);
    EXPECT_EQ(r.status, SolveStatus::Underdetermined);
    EXPECT_TRUE(r.diagnostics.consistent);
    EXPECT_FALSE(r.diagnostics.unique);
    ASSERT_EQ(r.free_symbols, std::vector<Symbol>{y});
    ASSERT_EQ(r.kernel_basis.size(), 1u);
    // particular + t * kernel solves the row for several t
    for (int t = -3; t <= 3; ++t) {
        std::map<Symbol, Rational> v = r.solution;
        for (const auto& [s2, c] : r.kernel_basis[0]) v[s2] += c * t;
        EXPECT_TRUE(evaluate(s.rows[0].form, v).is_zero());
    }
}

TEST(SolveExact, InconsistentNamesFirstRow) {
    LinearSystem s;
    s.add(LinForm::symbol(x) - LinForm(2), "a");
    s.add(LinForm::symbol(y) - LinForm(1), "b");
    s.add(LinForm::symbol(x) + LinForm::symbol(y) - LinForm(4), "c");
    s.add(LinForm::symbol(x) - LinForm(5), "d");
    auto r = solve_exact(s);
    EXPECT_EQ(r.status, SolveStatus::Inconsistent);
    EXPECT_FALSE(r.diagnostics.consistent);
    ASSERT_TRUE(r.first_inconsistent_row());
    EXPECT_EQ(*r.first_inconsistent_row(), 2u);
    EXPECT_EQ(r.diagnostics.inconsistent_rows.size(), 2u);
}

TEST(SolveExact, RejectsEmptySystem) { EXPECT_THROW(solve_exact(LinearSystem{}), std::invalid_argument); }

TEST(SolveExact, ConstantRows) {
    LinearSystem s;
    s.add(LinForm(0), "0 = 0");
    s.add(LinForm::symbol(x) - LinForm(1), "x = 1");
    auto r = solve_exact(s);
    EXPECT_EQ(r.status, SolveStatus::Unique);
    EXPECT_EQ(r.diagnostics.redundant_rows, std::vector<std::size_t>{0});

    LinearSystem bad;
    bad.add(LinForm(3), "3 = 0");
    EXPECT_EQ(solve_exact(bad).status, SolveStatus::Inconsistent);
}

class PlantedSolution : public ::testing::Test {
protected:
    Gen gen{0x5eed'0003};

    // Random integer system with entries up to 1e6 and a planted rational solution.
    LinearSystem planted(int n, int extra, std::map<Symbol, Rational>& truth) {
        truth.clear();
        for (int j = 0; j < n; ++j) truth[static_cast<Symbol>(j)] = Rational(gen.int_in(-1'000'000, 1'000'000), gen.int_in(1, 1000));
        LinearSystem s;
        for (int i = 0; i < n + extra; ++i) {
            LinForm row;
            Rational value = 0;
            for (int j = 0; j < n; ++j) {
                auto c = gen.int_in(-1'000'000, 1'000'000);
                row.add_term(static_cast<Symbol>(j), c);
                value += c * truth[static_cast<Symbol>(j)];
            }
            row += LinForm(-value);
            s.add(row, "row " + std::to_string(i));
        }
        return s;
    }
};

TEST_F(PlantedSolution, RecoversExactly) {
    for (int iter = 0; iter < 40; ++iter) {
        const int n = static_cast<int>(gen.int_in(1, 12));
        const int extra = static_cast<int>(gen.int_in(0, 5));
        std::map<Symbol, Rational> truth;
        auto s = planted(n, extra, truth);
        auto r = solve_exact(s);
        // Random integer matrices of this size are full rank with overwhelming probability.
        ASSERT_EQ(r.status, SolveStatus::Unique) << "iteration " << iter;
        EXPECT_EQ(r.solution, truth);
        EXPECT_EQ(r.diagnostics.rank, static_cast<std::size_t>(n));
        EXPECT_EQ(r.diagnostics.redundant_rows.size(), static_cast<std::size_t>(extra));
    }
}

TEST_F(PlantedSolution, PerturbedSurplusRowIsInconsistent) {
    for (int iter = 0; iter < 20; ++iter) {
        const int n = static_cast<int>(gen.int_in(1, 8));
        std::map<Symbol, Rational> truth;
        auto s = planted(n, 2, truth);
        const std::size_t victim = static_cast<std::size_t>(gen.int_in(0, n + 1));
        s.rows[victim].form += LinForm(1);
        auto r = solve_exact(s);
        EXPECT_EQ(r.status, SolveStatus::Inconsistent);
    }
}
