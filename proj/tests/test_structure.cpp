#include <gtest/gtest.h>

#include "agolomb/structure.hpp"

using namespace agolomb;

TEST(DefiningProperty, HoldsForOrdersTwoToTen) {
    for (unsigned r = 2; r <= 10; ++r) {
        const DefinitionReport rep = verify_defining_property(generate_almost_golomb(r, 10000), r);
        EXPECT_TRUE(rep.pass()) << "r=" << r;
        EXPECT_EQ(rep.first_violation(), -1);
        EXPECT_GT(rep.anchor.checked, 1000u);
        EXPECT_GT(rep.minimality.checked, 1000u);
    }
}

TEST(DefiningProperty, BumpedTermIsCaught) {
    const Sequence a = generate_almost_golomb(2, 200).with_term(3, 3);
    const DefinitionReport rep = verify_defining_property(a, 2);
    EXPECT_FALSE(rep.pass());
    EXPECT_EQ(rep.minimality.first_index(), 3);
    EXPECT_EQ(rep.anchor.first_index(), 2);
}

TEST(DefiningProperty, SerialAndParallelAgree) {
    const Sequence a = generate_almost_golomb(3, 50000).with_term(20000, 9999);
    const DefinitionReport s = verify_defining_property(a, 3, Exec::serial);
    const DefinitionReport p = verify_defining_property(a, 3, Exec::parallel);
    EXPECT_EQ(s.anchor.samples, p.anchor.samples);
    EXPECT_EQ(s.anchor.violation_count, p.anchor.violation_count);
    EXPECT_EQ(s.minimality.checked, p.minimality.checked);
    EXPECT_EQ(s.monotone.samples, p.monotone.samples);
}

TEST(Invariants, HoldOnGeneratedSequences) {
    for (unsigned r : {2u, 3u, 4u, 7u, 12u}) {
        const ReportBundle b = structural_invariants(generate_almost_golomb(r, 20000), r);
        EXPECT_TRUE(b.pass()) << "r=" << r << " failures " << b.failures();
    }
}

TEST(NestedAnchor, HandExampleAndSweep) {
    // r = 2, n = 5: S_5 = 7, S_7 = 9 = 2*5 - d(6).
    const Sequence a = generate_almost_golomb(2, 40);
    EXPECT_EQ(window_sum(a, 5, 2), 7u);
    EXPECT_EQ(window_sum(a, 7, 2), 9u);
    for (unsigned r = 2; r <= 6; ++r) {
        const CheckReport c = nested_anchor_check(generate_almost_golomb(r, 10000), r);
        EXPECT_TRUE(c.pass()) << "r=" << r;
        EXPECT_EQ(c.lo, 1);
    }
}

TEST(NestedAnchor, DetectsCorruption) {
    const Sequence a = generate_almost_golomb(5, 10000);
    const Sequence b = a.with_term(700, a(700) + 40);
    EXPECT_FALSE(nested_anchor_check(b, 5).pass());
}

TEST(WindowDeterminism, FunctionalForSmallOrders) {
    for (unsigned r = 2; r <= 6; ++r) {
        const WindowReport w = window_determinism_check(generate_almost_golomb(r, 100000), r);
        EXPECT_TRUE(w.pass()) << "r=" << r;
        EXPECT_EQ(w.C, static_cast<int>(2 * r) - 3);
        EXPECT_EQ(w.D, static_cast<int>(r * (r + 1) / 2) - 1);
        ASSERT_EQ(w.distinct_windows.size(), r);
        for (auto n : w.distinct_windows) EXPECT_GT(n, 0u);
    }
}

TEST(WindowDeterminism, TinyInputIsVacuous) {
    const WindowReport w = window_determinism_check(generate_almost_golomb(5, 8), 5);
    EXPECT_TRUE(w.pass());
    EXPECT_EQ(w.total_windows(), 0u);
}

TEST(Multiplicity, KnownOrders) {
    const MultiplicityInfo m4 = prefix_and_max_multiplicity(4, 200000);
    EXPECT_EQ(m4.max_multiplicity, 3u);
    EXPECT_TRUE(m4.stabilized);
    EXPECT_EQ(m4.prefix_value, 2u);
    EXPECT_EQ(m4.boundary_run, 2u);
    EXPECT_TRUE(m4.threshold_identity);

    const MultiplicityInfo m10 = prefix_and_max_multiplicity(10, 200000);
    EXPECT_EQ(m10.max_multiplicity, 5u);
    EXPECT_TRUE(m10.threshold_identity);

    const MultiplicityInfo m3 = prefix_and_max_multiplicity(3, 200000);
    EXPECT_EQ(m3.boundary_run, 3u);
}

TEST(Multiplicity, ShortSequenceIsNotStabilized) {
    const MultiplicityInfo m = prefix_and_max_multiplicity(40, 300);
    EXPECT_FALSE(m.stabilized);
}
