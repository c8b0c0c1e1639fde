#include "charnum/reference.hpp"
#include "charnum/verify.hpp"

#include <gtest/gtest.h>

using namespace charnum;
using namespace charnum::reference;

TEST(ReferenceDiff, IdenticalTablesAgree) {
    const Table t = boundary_reference();
    EXPECT_TRUE(emit_reference_diff(t, t).empty());
}

TEST(ReferenceDiff, OnePerturbedEntryGivesOneMismatch) {
    const Table ref = boundary_reference();
    for (std::size_t i : {std::size_t{0}, std::size_t{15}, ref.entries.size() - 1}) {
        Table computed = ref;
        computed.location = "computed";
        computed.entries[i].second += LinForm(1);
        auto diff = emit_reference_diff(computed, ref);
        ASSERT_EQ(diff.size(), 1u);
        EXPECT_EQ(diff[0].location, "Table 2, " + ref.entries[i].first);
        EXPECT_EQ(diff[0].expected, ref.entries[i].second.str());
        EXPECT_EQ(diff[0].computed, computed.entries[i].second.str());
    }
}

TEST(ReferenceDiff, MismatchNamesColumnAndSplit) {
    Table computed = boundary_reference();
    for (auto& [key, value] : computed.entries)
        if (key == "column H, a=1") value += LinForm(1);
    auto diff = emit_reference_diff(computed, boundary_reference());
    ASSERT_EQ(diff.size(), 1u);
    EXPECT_EQ(diff[0].location, "Table 2, column H, a=1");
    EXPECT_EQ(diff[0].computed, "90549361");
    EXPECT_EQ(diff[0].expected, "90549360");
}

TEST(ReferenceDiff, ShapeErrors) {
    const Table ref = boundary_reference();
    Table shorter = ref;
    shorter.entries.pop_back();
    EXPECT_THROW(emit_reference_diff(shorter, ref), ShapeError);
    Table renamed = ref;
    renamed.entries[0].first = "column Z, a=0";
    EXPECT_THROW(emit_reference_diff(renamed, ref), ShapeError);
}

TEST(ReferenceDiff, ComputedBoundaryMatches) {
    auto diff = emit_reference_diff(boundary_table(quartic::all_columns()), boundary_reference());
    for (const auto& m : diff) ADD_FAILURE() << m.location << ": computed " << m.computed << ", expected " << m.expected;
}

TEST(ReferenceData, Loads) {
    const auto& r = data();
    EXPECT_EQ(r.boundary_location, "Table 2");
    EXPECT_EQ(r.quartic_numbers.location, "Table 7");
    EXPECT_EQ(r.quartic_numbers.values.size(), 15u);
    EXPECT_EQ(r.boundary.size(), 8u);
    EXPECT_EQ(r.case_subtotals.size(), 3u);
    EXPECT_EQ(r.unknowns.size(), 6u);
}

TEST(ReferenceData, RejectsBadVersion) {
    const std::string bad = R"({"schema_version": 2})";
    EXPECT_THROW(parse(bad, bad, bad, bad, bad), FormatError);
}

TEST(Verify, EveryCheckPasses) {
    auto checks = verify::run_checks();
    EXPECT_GE(checks.size(), 30u);
    for (const auto& c : checks) EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
}

TEST(Verify, CaseSubtotalsMatchAsMultisets) {
    for (const auto& cs : data().case_subtotals) {
        auto got = verify::case_subtotals(cs.divisor, cs.a);
        auto want = cs.subtotals;
        std::sort(got.begin(), got.end());
        std::sort(want.begin(), want.end());
        EXPECT_EQ(got, want) << cs.location;
        Integer sum = 0;
        for (const auto& x : want) sum += x;
        EXPECT_EQ(sum, cs.total) << cs.location;
    }
}
