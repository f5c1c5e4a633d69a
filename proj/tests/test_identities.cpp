#include <gtest/gtest.h>

#include "agolomb/identities.hpp"

using namespace agolomb;

namespace {

const Sequence& seq(unsigned r) {
    static const Sequence s[4] = {generate_almost_golomb(2, 100000), generate_almost_golomb(3, 100000),
                                  generate_almost_golomb(4, 100000), generate_almost_golomb(5, 100000)};
    return s[r - 2];
}

bool only_table_failures(const ReportBundle& b) {
    for (const auto& c : b.checks)
        if (!c.pass() && c.name.find("dfao_table") == std::string::npos) return false;
    return true;
}

}  // namespace

TEST(OrderTwo, AllFamiliesHold) {
    const Sequence& a = seq(2);
    EXPECT_EQ(a(16), 12u);
    EXPECT_EQ(a(24), 16u);
    EXPECT_EQ(a(6) - a(5), 0u);
    const ReportBundle b = check_r2(a);
    EXPECT_TRUE(b.pass()) << b.failures() << " failures";
    for (const char* name : {"r2.denesting.pivot_pow2", "r2.automata.and_rule", "r2.combinatorial.second_bit"}) {
        const CheckReport* c = b.find(name);
        ASSERT_NE(c, nullptr) << name;
        EXPECT_GT(c->checked, 0u) << name;
    }
}

TEST(OrderTwo, CorruptionIsDetected) {
    const Sequence& a = seq(2);
    const Sequence b = a.with_term(5000, a(5000) + 1);
    EXPECT_FALSE(check_r2(b).pass());
}

TEST(OrderThree, AllFamiliesHold) {
    const Sequence& a = seq(3);
    EXPECT_EQ(a(9), 6u);
    EXPECT_EQ(a(16), 9u);
    const CorrectorSet eps = make_correctors(3, Method::recurrence, a.size() / 3 + 2);
    const ReportBundle b = check_r3(a, eps);
    EXPECT_TRUE(b.pass()) << b.failures() << " failures";
    EXPECT_TRUE(r3_interval_structure(9).pass());
}

TEST(OrderThree, PrintedSpecialValueIsOffByOne) {
    const Sequence& a = seq(3);
    u64 p = 1;  // 3^(k-2)
    for (unsigned k = 2; 5 * 3 * p - 1 <= a.size(); ++k, p *= 3) {
        const u64 got = a(static_cast<i64>(5 * 3 * p - 1));
        EXPECT_NE(got, 8 * p - 1) << k;
        EXPECT_EQ(got, 8 * p) << k;
    }
    EXPECT_EQ(a(14), 8u);
}

TEST(OrderFour, OnlyTranscribedTablesFail) {
    const Sequence& a = seq(4);
    const CorrectorSet eps = make_correctors(4, Method::recurrence, a.size() / 4 + 2);
    EXPECT_TRUE(check_r4(a, eps).pass());
    const ReportBundle t = corrector_agreement(4, 20000, &a, DfaoSource::table);
    EXPECT_FALSE(t.pass());
    EXPECT_TRUE(only_table_failures(t));
    EXPECT_EQ(t.find("r4.automata.dfao_table_vs_recurrence_e0")->first_index(), 4096);
    EXPECT_TRUE(corrector_agreement(4, 20000, &a, DfaoSource::recurrence).pass());
}

TEST(OrderFive, OnlyTranscribedTablesFail) {
    const Sequence& a = seq(5);
    const CorrectorSet c = make_correctors(5, Method::recurrence, a.size() / 5 + 2);
    EXPECT_TRUE(check_r5(a, c).pass());
    const ReportBundle t = corrector_agreement(5, 20000, &a, DfaoSource::table);
    EXPECT_TRUE(only_table_failures(t));
    EXPECT_EQ(t.find("r5.automata.dfao_table_vs_recurrence_U")->first_index(), 3125);
    EXPECT_TRUE(corrector_agreement(5, 20000, &a, DfaoSource::recurrence).pass());
}

TEST(Sweeps, RecurrencesFromDefinitionValues) {
    EXPECT_TRUE(r4_recurrence_sweep(seq(4), 5000).pass());
    EXPECT_TRUE(r5_recurrence_sweep(seq(5), 3000).pass());
    EXPECT_EQ(r4_recurrence_sweep(seq(4), 5000).checks.size(), 16u);
    EXPECT_EQ(r5_recurrence_sweep(seq(5), 3000).checks.size(), 10u);
}

TEST(GapTwo, FamiliesHoldAndConflictsAreReported) {
    const Sequence a = generate_gap_variant(2, 100000);
    const ReportBundle b = check_gap2(a);
    for (const char* name : {"gap2.denesting.family_7x2k", "gap2.denesting.family_5x2k", "gap2.denesting.family_3x2k",
                             "gap2.combinatorial.correction_set_cardinality", "gap2.combinatorial.unit_increments"}) {
        ASSERT_NE(b.find(name), nullptr) << name;
        EXPECT_TRUE(b.find(name)->pass()) << name;
    }
    const CheckReport* rec = b.find("gap2.combinatorial.correction_set_recursion");
    ASSERT_NE(rec, nullptr);
    EXPECT_EQ(rec->first_index(), 4);

    const CheckReport pp = gap2_printed_prefix(a);
    EXPECT_FALSE(pp.pass());
    EXPECT_EQ(pp.violation_count, 7u);
}

TEST(Suites, ParseAndApplicability) {
    for (Suite s : {Suite::definition, Suite::denesting, Suite::automata, Suite::combinatorial, Suite::all})
        EXPECT_EQ(parse_suite(suite_name(s)), s);
    EXPECT_THROW(parse_suite("bogus"), std::invalid_argument);
    EXPECT_TRUE(suite_applies(Suite::definition, 40));
    EXPECT_TRUE(suite_applies(Suite::denesting, 5));
    EXPECT_FALSE(suite_applies(Suite::denesting, 6));
    EXPECT_TRUE(suite_applies(Suite::combinatorial, 3));
    EXPECT_FALSE(suite_applies(Suite::combinatorial, 4));
}

TEST(Suites, RunSuiteFiltersByTag) {
    const Sequence a = generate_almost_golomb(7, 10000);
    EXPECT_THROW(run_suite(a, 7, Suite::denesting), InapplicableSuite);
    EXPECT_TRUE(run_suite(a, 7, Suite::definition).pass());
    EXPECT_TRUE(run_suite(a, 7, Suite::all).pass());

    const ReportBundle d = run_suite(seq(3), 3, Suite::denesting);
    ASSERT_FALSE(d.checks.empty());
    for (const auto& c : d.checks) EXPECT_NE(c.name.find(".denesting."), std::string::npos) << c.name;
}

TEST(Suites, SerialMatchesParallel) {
    SuiteOptions s;
    s.exec = Exec::serial;
    SuiteOptions p;
    const ReportBundle x = run_suite(seq(5), 5, Suite::all, s);
    const ReportBundle y = run_suite(seq(5), 5, Suite::all, p);
    ASSERT_EQ(x.checks.size(), y.checks.size());
    for (std::size_t i = 0; i < x.checks.size(); ++i) {
        EXPECT_EQ(x.checks[i].name, y.checks[i].name);
        EXPECT_EQ(x.checks[i].violation_count, y.checks[i].violation_count) << x.checks[i].name;
        EXPECT_EQ(x.checks[i].samples, y.checks[i].samples) << x.checks[i].name;
        EXPECT_EQ(x.checks[i].checked, y.checks[i].checked) << x.checks[i].name;
    }
}
