#include <gtest/gtest.h>

#include <cmath>

#include "agolomb/analysis.hpp"

using namespace agolomb;

namespace {

const RatioFamily* family(const RatioReport& r, const std::string& prefix) {
    for (const auto& f : r.families)
        if (f.family.rfind(prefix, 0) == 0) return &f;
    return nullptr;
}

}  // namespace

TEST(Ratios, OrderTwoPivots) {
    const RatioReport r = ratio_pivots(2, generate_almost_golomb(2, 1000000));
    EXPECT_TRUE(r.pass());
    const RatioFamily* f = family(r, "a(2^k)");
    ASSERT_NE(f, nullptr);
    for (const auto& [k, q] : f->ratios) EXPECT_DOUBLE_EQ(q, 0.75) << k;
}

TEST(Ratios, OrderThreeHandValues) {
    const Sequence a = generate_almost_golomb(3, 1000000);
    EXPECT_EQ(a(15), 8u);
    EXPECT_EQ(a(45), 24u);
    EXPECT_EQ(a(135), 72u);
    EXPECT_TRUE(ratio_pivots(3, a).pass());
}

TEST(Ratios, OrderFourAndFive) {
    const RatioReport r4 = ratio_pivots(4, generate_almost_golomb(4, 1000000));
    EXPECT_TRUE(r4.pass());
    const RatioReport r5 = ratio_pivots(5, generate_almost_golomb(5, 1000000));
    EXPECT_TRUE(r5.pass());
    const RatioFamily* f = family(r5, "a(5^k)");
    ASSERT_NE(f, nullptr);
    EXPECT_NEAR(f->limit, 93.0 / 200.0, 1e-15);
    EXPECT_NEAR(f->ratios.back().second, 93.0 / 200.0, 1e-3);
}

TEST(Ratios, ShortInputSkipsFamilies) {
    const RatioReport r = ratio_pivots(5, generate_almost_golomb(5, 200));
    bool skipped = false;
    for (const auto& f : r.families) skipped |= f.skipped;
    EXPECT_TRUE(skipped);
}

TEST(Cesaro, ClosedFormLimits) {
    EXPECT_NEAR(cesaro_l1(), 0.75 + std::log(std::pow(6.0, 0.75) / 4.0), 1e-15);
    EXPECT_NEAR(cesaro_l2(), 2.0 / 3.0 + std::log(std::pow(3.0, 2.0 / 3.0) / 2.0), 1e-15);
    EXPECT_DOUBLE_EQ(cesaro_tolerance(30), kCesaroFloor);
    EXPECT_GT(cesaro_tolerance(3), kCesaroFloor);
}

TEST(Cesaro, DirectSumAtEight) {
    const Sequence a = generate_almost_golomb(2, 8);
    const double want = (1 + 1 + 2.0 / 3 + 3.0 / 4 + 4.0 / 5 + 4.0 / 6 + 5.0 / 7 + 6.0 / 8) / 8;
    EXPECT_NEAR(cesaro_mean(a, 8), want, 1e-15);
}

TEST(Cesaro, ConvergesAndSeparates) {
    const Sequence a = generate_almost_golomb(2, 3u << 17);
    const CesaroReport c = cesaro_r2(a, 18, 3, 10);
    EXPECT_TRUE(c.pass());
    ASSERT_EQ(c.rows.size(), 16u);
    EXPECT_NEAR(c.rows.back().c_pow, cesaro_mean(a, 1u << 18), 1e-12);
    EXPECT_NEAR(c.rows.back().c_three, cesaro_mean(a, 3u << 17), 1e-12);
    EXPECT_LT(c.rows.back().err1, 1e-4);
}

TEST(Cesaro, SerialAndParallelIdentical) {
    const Sequence a = generate_almost_golomb(2, 3u << 15);
    const CesaroReport p = cesaro_r2(a, 16, 3, 10, Exec::parallel);
    const CesaroReport s = cesaro_r2(a, 16, 3, 10, Exec::serial);
    ASSERT_EQ(p.rows.size(), s.rows.size());
    for (std::size_t i = 0; i < p.rows.size(); ++i) {
        EXPECT_EQ(p.rows[i].c_pow, s.rows[i].c_pow);
        EXPECT_EQ(p.rows[i].c_three, s.rows[i].c_three);
    }
}

TEST(Cesaro, RejectsShortInput) {
    EXPECT_THROW(cesaro_r2(generate_almost_golomb(2, 1000), 12), std::invalid_argument);
}

TEST(Oscillation, OrderTwoEnvelope) {
    const auto w = oscillation_profile(generate_almost_golomb(2, 1000000), 50);
    ASSERT_EQ(w.size(), 50u);
    double lo = 1, hi = 0;
    for (const auto& x : w) {
        lo = std::min(lo, x.min_ratio);
        hi = std::max(hi, x.max_ratio);
    }
    EXPECT_NEAR(hi, 0.75, 0.01);
    EXPECT_NEAR(lo, 2.0 / 3.0, 0.01);
}

TEST(Oscillation, WindowsTileTheTail) {
    const auto w = oscillation_profile(generate_almost_golomb(3, 10000), 7);
    ASSERT_EQ(w.size(), 7u);
    EXPECT_EQ(w.front().lo, 5000u);
    EXPECT_EQ(w.back().hi, 10000u);
    for (std::size_t i = 1; i < w.size(); ++i) EXPECT_EQ(w[i].lo, w[i - 1].hi + 1);
}

TEST(Meta, SmallOrders) {
    const MetaReport m = meta_structure(13);
    EXPECT_TRUE(m.stabilized());
    EXPECT_EQ(m.M(7), 4u);
    EXPECT_EQ(m.M(10), 5u);
    EXPECT_EQ(m.j(3), 3u);
    EXPECT_EQ(m.j(4), 7u);
    EXPECT_EQ(m.j(5), 10u);
    EXPECT_EQ(m.j(6), 13u);
    EXPECT_EQ(m.j(6) - m.j(5), 3u);
    EXPECT_TRUE(m.conjectures_hold());
    EXPECT_TRUE(m.table1_match());
}

TEST(Meta, ThresholdsAgainstGolombPartialSums) {
    const MetaReport m = meta_structure(70);
    EXPECT_EQ(m.j(10), 30u);
    EXPECT_EQ(m.j(16), 64u);
    // j_16 = S(15) + 2 with S the Golomb partial sums.
    const GolombPair g = generate_golomb(200);
    EXPECT_EQ(m.j(16), g.s(15) + 2);
    EXPECT_TRUE(m.conjectures_hold());
}

TEST(Meta, WorkerCountDoesNotMatter) {
    const MetaReport p = meta_structure(40, 0, 4, Exec::parallel);
    const MetaReport s = meta_structure(40, 0, 4, Exec::serial);
    ASSERT_EQ(p.orders.size(), s.orders.size());
    for (std::size_t i = 0; i < p.orders.size(); ++i) {
        EXPECT_EQ(p.orders[i].M, s.orders[i].M);
        EXPECT_EQ(p.orders[i].boundary_run, s.orders[i].boundary_run);
    }
}

TEST(Meta, PrintedRowsHaveExpectedShape) {
    EXPECT_EQ(Table1::M().size(), 49u);
    EXPECT_EQ(Table1::j().size(), 28u);
    EXPECT_EQ(Table1::gaps().size(), 28u);
    EXPECT_EQ(Table1::G().size(), 28u);
    EXPECT_EQ(Table1::M().front(), 2u);
    EXPECT_EQ(Table1::j().back(), 179u);
}

TEST(Meta, PrintedGapRowDisagreesWithPrintedThresholds) {
    // Differences of the printed j row against the printed gap row.
    std::vector<unsigned> bad;
    const auto& j = Table1::j();
    const auto& g = Table1::gaps();
    for (std::size_t i = 0; i + 1 < j.size(); ++i)
        if (j[i + 1] - j[i] != g[i]) bad.push_back(static_cast<unsigned>(i + 3));
    EXPECT_EQ(bad, (std::vector<unsigned>{19, 23, 28}));
}
