#include <gtest/gtest.h>

#include <random>

#include "agolomb/correctors.hpp"
#include "agolomb/dfao.hpp"
#include "agolomb/identities.hpp"
#include "agolomb/structure.hpp"

using namespace agolomb;

TEST(Properties, GeneratedSequencesAreWellFormed) {
    std::mt19937_64 rng(20240611);
    std::uniform_int_distribution<unsigned> order(2, 14);
    std::uniform_int_distribution<std::size_t> length(1, 20000);
    for (int trial = 0; trial < 40; ++trial) {
        const unsigned r = order(rng);
        const std::size_t N = length(rng);
        const Sequence a = generate_almost_golomb(r, N);
        ASSERT_EQ(a.size(), N);
        EXPECT_EQ(a(1), 1u);
        for (i64 n = 2; n <= static_cast<i64>(N); ++n) {
            ASSERT_LE(a(n) - a(n - 1), 1u) << "r=" << r << " n=" << n;
            ASSERT_LE(a(n), static_cast<u64>(n));
        }
        for (i64 n = 1; n <= static_cast<i64>(N); ++n) {
            const u64 S = window_sum(a, n, r);
            if (S > N) break;
            ASSERT_EQ(a(static_cast<i64>(S)), static_cast<u64>(n)) << "r=" << r << " n=" << n;
        }
    }
}

TEST(Properties, SingleFlipsBreakTheDefinition) {
    std::mt19937_64 rng(7);
    for (unsigned r : {2u, 3u, 4u, 5u, 8u}) {
        const std::size_t N = 5000;
        const Sequence a = generate_almost_golomb(r, N);
        std::uniform_int_distribution<std::size_t> pos(1, N - r);
        std::bernoulli_distribution up(0.5);
        for (int trial = 0; trial < 30; ++trial) {
            const std::size_t k = pos(rng);
            const u64 v = a.at(k);
            const u64 w = up(rng) || v == 1 ? v + 1 : v - 1;
            const ReportBundle b = run_suite(a.with_term(k, w), r, Suite::definition);
            EXPECT_FALSE(b.pass()) << "r=" << r << " k=" << k << " " << v << "->" << w;
        }
    }
}

TEST(Properties, DfaoMatchesRecurrenceAtRandomPoints) {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<u64> n_dist(6, u64{1} << 40);
    const Dfao e3 = build_dfao("r3-eps");
    const Dfao k4 = build_dfao("r4-eps1", DfaoSource::recurrence);
    const Dfao k5 = build_dfao("r5-U", DfaoSource::recurrence);
    Eps3Recurrence rec3;
    R4Recurrence rec4;
    R5Recurrence rec5;
    for (int trial = 0; trial < 500; ++trial) {
        const u64 n = n_dist(rng);
        ASSERT_EQ(eval_dfao(e3, n), rec3(n)) << n;
        ASSERT_EQ(eval_dfao(e3, n), eps3_interval(n)) << n;
        ASSERT_EQ(eval_dfao(k4, n), rec4(1, n)) << n;
        ASSERT_EQ(eval_dfao(k5, n), rec5(n).code()) << n;
    }
}

TEST(Properties, OrderThreeRecurrenceIsSelfSimilar) {
    // eps(3n + 1) = eps(n) for n >= 2.
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<u64> n_dist(2, u64{1} << 36);
    Eps3Recurrence rec;
    for (int trial = 0; trial < 1000; ++trial) {
        const u64 n = n_dist(rng);
        ASSERT_EQ(rec(3 * n + 1), rec(n)) << n;
    }
}
