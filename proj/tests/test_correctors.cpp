#include <gtest/gtest.h>

#include "agolomb/correctors.hpp"

using namespace agolomb;

namespace {

const Sequence& seq(unsigned r) {
    static const Sequence s3 = generate_almost_golomb(3, 300000);
    static const Sequence s4 = generate_almost_golomb(4, 300000);
    static const Sequence s5 = generate_almost_golomb(5, 300000);
    return r == 3 ? s3 : r == 4 ? s4 : s5;
}

}  // namespace

TEST(OrderThree, HandValuesEveryMethod) {
    const Sequence& a = seq(3);
    for (Method m : {Method::interval, Method::recurrence, Method::dfao}) {
        EXPECT_EQ(eps3(5, m), 1) << method_name(m);
        EXPECT_EQ(eps3(4, m), 0) << method_name(m);
        for (u64 n = 16; n <= 18; ++n) EXPECT_EQ(eps3(n, m), 1) << method_name(m) << " n=" << n;
        // Zero between I_2 and I_3.
        for (u64 n = 81 - 1; n <= 5 * 27; ++n) EXPECT_EQ(eps3(n, m), 0) << method_name(m) << " n=" << n;
    }
    EXPECT_EQ(eps3_definition(a, 5), 1);
    EXPECT_EQ(eps3_definition(a, 4), 0);
}

TEST(OrderThree, IntervalEndpoints) {
    EXPECT_EQ(r3_interval(0), (std::pair<u64, u64>{5, 5}));
    EXPECT_EQ(r3_interval(1), (std::pair<u64, u64>{16, 18}));
    EXPECT_EQ(r3_interval(2), (std::pair<u64, u64>{49, 57}));
}

TEST(OrderThree, AllMethodsAgree) {
    const Sequence& a = seq(3);
    Eps3Recurrence rec;
    const u64 hi = definition_limit(3, a.size());
    ASSERT_GT(hi, 90000u);
    for (u64 n = 2; n <= hi; ++n) {
        const int want = eps3_definition(a, n);
        ASSERT_EQ(eps3_interval(n), want) << n;
        ASSERT_EQ(rec(n), want) << n;
    }
}

TEST(OrderThree, Rule) {
    EXPECT_EQ(eps3_rule(0, 1, 0), 1);
    EXPECT_EQ(eps3_rule(0, 0, 1), 0);
    EXPECT_EQ(eps3_rule(1, 0, 1), 1);
    EXPECT_EQ(eps3_rule(2, 1, 0), 0);
}

TEST(OrderFour, HandValues) {
    EXPECT_EQ(r4_initial(2, 16), 0);
    EXPECT_EQ(r4_initial(3, 16), 1);
    EXPECT_EQ(r4_initial(0, 5), 0);
    EXPECT_EQ(r4_initial(2, 5), 1);
    EXPECT_EQ(r4_initial(2, 6), 1);
    const Sequence& a = seq(4);
    EXPECT_EQ(r4_eps(1, 25, Method::recurrence), 0);
    EXPECT_EQ(r4_eps(1, 25, Method::definition, &a), 0);
    EXPECT_EQ(r4_definition(a, 2, 16), 0);
    EXPECT_EQ(r4_definition(a, 3, 16), 1);
}

TEST(OrderFour, InitialTableMatchesDefinition) {
    const Sequence& a = seq(4);
    for (unsigned i = 0; i < 4; ++i)
        for (u64 n = 5; n <= 23; ++n) EXPECT_EQ(r4_initial(i, n), r4_definition(a, i, n)) << i << "," << n;
}

TEST(OrderFour, RecurrenceMatchesDefinition) {
    const Sequence& a = seq(4);
    R4Recurrence rec;
    const u64 hi = definition_limit(4, a.size());
    for (unsigned i = 0; i < 4; ++i)
        for (u64 n = 5; n <= hi; ++n) ASSERT_EQ(rec(i, n), r4_definition(a, i, n)) << i << "," << n;
}

TEST(OrderFive, HandValues) {
    R5Recurrence U;
    EXPECT_EQ(U(4), (Pair{1, 0}));
    EXPECT_EQ(U(12), (Pair{0, 1}));
    EXPECT_EQ(U(13), (Pair{1, 0}));
    EXPECT_EQ(U(15), (Pair{1, 0}));
    EXPECT_EQ(U(20).e, 0);
    const Sequence& a = seq(5);
    const R5Values v = r5_definition(a, 15);
    EXPECT_EQ(v.eps, 1);
    EXPECT_EQ(v.eta, 0);
}

TEST(OrderFive, ThetaAndEps4Tables) {
    const Pair p00{0, 0}, p10{1, 0}, p01{0, 1};
    EXPECT_EQ(r5_theta(0, p01, p10), 1);
    EXPECT_EQ(r5_theta(1, p01, p10), 0);
    EXPECT_EQ(r5_eps4(4, p10, p01), -4);
    EXPECT_EQ(r5_eps4(4, p00, p00), -2);
    for (unsigned d = 0; d < 4; ++d) EXPECT_GE(r5_eps4(d, p10, p00), -4);
    EXPECT_THROW(r5_theta(0, p10, p10), std::runtime_error);
    EXPECT_THROW(r5_complete(24, p10, p10, p10), std::runtime_error);
    EXPECT_FALSE(r5_known_transition(p10, p10));
}

TEST(OrderFive, InitialValuesMatchDefinition) {
    const Sequence& a = seq(5);
    for (u64 n = 3; n <= 14; ++n) {
        const R5Values v = r5_definition(a, n);
        EXPECT_EQ(r5_theta_initial(n), v.theta) << n;
        EXPECT_EQ(r5_eps4_initial(n), v.eps4) << n;
    }
    EXPECT_THROW(r5_theta_initial(15), std::out_of_range);
}

TEST(OrderFive, RecurrenceMatchesDefinition) {
    const Sequence& a = seq(5);
    R5Recurrence U;
    const u64 hi = definition_limit(5, a.size());
    for (u64 n = 3; n <= hi; ++n) {
        const R5Values want = r5_definition(a, n);
        ASSERT_EQ(U(n), (Pair{want.eps, want.eta})) << n;
        ASSERT_EQ(r5_correctors(n, Method::recurrence), want) << n;
    }
}

TEST(OrderFive, PrintedPlusTwoSignFails) {
    // a(5n+4) = T5(n+4) + 2 + eps4(n) is off by four everywhere.
    const Sequence& a = seq(5);
    for (u64 n = 3; n <= 2000; ++n) {
        const R5Values v = r5_correctors(n, Method::recurrence);
        const i64 printed = static_cast<i64>(t5(a, static_cast<i64>(n + 4))) + 2 + v.eps4;
        const i64 fixed = static_cast<i64>(t5(a, static_cast<i64>(n + 4))) - 2 + v.eps4;
        EXPECT_NE(printed, static_cast<i64>(a(static_cast<i64>(5 * n + 4)))) << n;
        EXPECT_EQ(fixed, static_cast<i64>(a(static_cast<i64>(5 * n + 4)))) << n;
    }
}

TEST(Sets, DenseSetsMatchPointwise) {
    const CorrectorSet s3 = make_correctors(3, Method::interval, 5000);
    for (u64 n = s3.floor(); n <= 5000; ++n) ASSERT_EQ(s3.eps(n), eps3(n, Method::interval));
    const CorrectorSet s5 = make_correctors(5, Method::recurrence, 5000);
    for (u64 n = s5.floor(); n <= 5000; ++n) ASSERT_EQ(s5.r5(n), r5_correctors(n, Method::recurrence));
    const CorrectorSet s4 = make_correctors(4, Method::dfao, 4000, nullptr, DfaoSource::recurrence);
    for (unsigned i = 0; i < 4; ++i)
        for (u64 n = s4.floor(); n <= 4000; ++n) ASSERT_EQ(s4.eps_i(i, n), r4_eps(i, n, Method::recurrence));
}

TEST(Sets, SerialAndParallelIdentical) {
    const CorrectorSet p = make_correctors(5, Method::dfao, 20000, nullptr, DfaoSource::recurrence, Exec::parallel);
    const CorrectorSet s = make_correctors(5, Method::dfao, 20000, nullptr, DfaoSource::recurrence, Exec::serial);
    for (u64 n = p.floor(); n <= 20000; ++n) ASSERT_EQ(p.r5(n), s.r5(n));
}

TEST(Sets, RejectsInapplicable) {
    EXPECT_THROW(make_correctors(3, Method::definition, 1000), std::invalid_argument);
    EXPECT_THROW(make_correctors(4, Method::interval, 1000), std::invalid_argument);
    EXPECT_THROW(make_correctors(6, Method::recurrence, 1000), std::invalid_argument);
    const Sequence a = generate_almost_golomb(3, 300);
    EXPECT_THROW(make_correctors(3, Method::definition, 1000, &a), std::invalid_argument);
}
