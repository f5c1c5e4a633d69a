#include <gtest/gtest.h>

#include <sstream>

#include "agolomb/correctors.hpp"
#include "agolomb/dfao.hpp"

using namespace agolomb;

TEST(Digits, MostSignificantFirst) {
    EXPECT_EQ(digits_msd(6, 4), (Digits{1, 2}));
    EXPECT_EQ(digits_msd(5, 3), (Digits{1, 2}));
    EXPECT_EQ(digits_msd(3, 5), (Digits{3}));
    EXPECT_THROW(digits_msd(0, 3), std::invalid_argument);
    for (std::uint64_t n = 1; n < 5000; n += 7)
        for (unsigned b = 2; b <= 5; ++b) EXPECT_EQ(digits_value(digits_msd(n, b), b), n);
}

TEST(Tables, StateCountsAndTotality) {
    const std::vector<std::pair<std::string, std::size_t>> want{{"r3-eps", 10},  {"r4-eps0", 30}, {"r4-eps1", 30},
                                                                {"r4-eps2", 29}, {"r4-eps3", 30}, {"r5-U", 23}};
    ASSERT_EQ(dfao_names().size(), want.size());
    for (const auto& [name, states] : want) {
        const Dfao m = build_dfao(name);
        EXPECT_EQ(m.state_count(), states) << name;
        EXPECT_EQ(m.initial_state, 0);
        EXPECT_NO_THROW(m.validate());
    }
    EXPECT_THROW(build_dfao("r6-eps"), std::invalid_argument);
    EXPECT_FALSE(is_dfao_name("r6-eps"));
}

TEST(Tables, SpotTransitions) {
    const Dfao r3 = build_dfao("r3-eps");
    EXPECT_EQ(r3.base, 3u);
    // Accepting states c=, c>, e< are 3, 4, 8.
    for (int s = 0; s < 10; ++s) EXPECT_EQ(r3.output[static_cast<std::size_t>(s)], s == 3 || s == 4 || s == 8) << s;

    const Dfao e0 = build_dfao("r4-eps0");
    EXPECT_EQ(e0.step(1, 2), 14);
    EXPECT_EQ(e0.output[14], 1);

    const Dfao u = build_dfao("r5-U");
    EXPECT_EQ(u.step(0, 3), 10);
    EXPECT_EQ(u.label(u.output[10]), "(0,1)");
}

TEST(Eval, KnownValues) {
    const Dfao r3 = build_dfao("r3-eps");
    EXPECT_EQ(eval_dfao(r3, 5), 1);
    EXPECT_EQ(eval_dfao(r3, 4), 0);
    for (std::uint64_t n = 16; n <= 18; ++n) EXPECT_EQ(eval_dfao(r3, n), 1);
    EXPECT_EQ(eval_dfao(build_dfao("r4-eps0"), 6), 1);
    const Dfao u = build_dfao("r5-U");
    EXPECT_EQ(u.label(eval_dfao(u, 4)), "(1,0)");
    EXPECT_EQ(u.label(eval_dfao(u, 13)), "(1,0)");
    EXPECT_EQ(u.label(eval_dfao(u, 12)), "(0,1)");
    EXPECT_THROW(eval_dfao(r3, 0), std::invalid_argument);
}

TEST(Dump, OneLinePerState) {
    const Dfao m = build_dfao("r4-eps2");
    const std::string text = dump_dfao(m);
    std::istringstream is(text);
    std::string line;
    std::size_t rows = 0;
    while (std::getline(is, line)) {
        std::istringstream ls(line);
        std::string tok;
        std::size_t cols = 0;
        while (ls >> tok) ++cols;
        EXPECT_EQ(cols, 2 + m.base);
        ++rows;
    }
    EXPECT_EQ(rows, 29u);
}

TEST(Geometric, QuinaryPivotAlternates) {
    const Dfao u = build_dfao("r5-U", DfaoSource::recurrence);
    const OrbitReport o = geometric_orbit(u, {1}, {}, 12);
    EXPECT_EQ(o.period, 2u);
    EXPECT_LE(o.preperiod, 2u);
    ASSERT_EQ(o.values.size(), 13u);
    for (std::size_t k = 2; k <= 12; ++k) {
        const std::string s = u.label(o.values[k]);
        EXPECT_TRUE(s == "(1,0)" || s == "(0,1)") << k;
        EXPECT_NE(o.values[k], o.values[k - 1]);
    }
}

TEST(Geometric, QuaternaryPivotIsConstant) {
    const Dfao k0 = build_dfao("r4-eps0", DfaoSource::recurrence);
    const OrbitReport o = geometric_orbit(k0, {1}, {}, 20);
    EXPECT_EQ(o.period, 1u);
    EXPECT_LE(o.preperiod, 3u);
    for (std::size_t k = 3; k < o.values.size(); ++k) EXPECT_EQ(o.values[k], 1) << k;

    // The transcribed table follows until 4^6 and then leaves the orbit.
    const Dfao t0 = build_dfao("r4-eps0");
    const OrbitReport ot = geometric_orbit(t0, {1}, {}, 20);
    for (std::size_t k = 3; k <= 5; ++k) EXPECT_EQ(ot.values[k], 1) << k;
    EXPECT_NE(ot.values[6], 1);
}

TEST(Geometric, SingleEvaluation) {
    const Dfao r3 = build_dfao("r3-eps");
    const OrbitReport o = geometric_orbit(r3, {1, 2}, {1, 2}, 0);
    ASSERT_EQ(o.values.size(), 1u);
    EXPECT_EQ(o.values[0], eval_dfao(r3, digits_value({1, 2, 1, 2}, 3)));
    EXPECT_GE(o.period, 1u);
}

TEST(Geometric, OrbitMatchesDirectEvaluation) {
    const Dfao m = build_dfao("r3-eps");
    const OrbitReport o = geometric_orbit(m, {2}, {1, 1}, 15);
    for (unsigned k = 0; k <= 15; ++k) {
        Digits w{2};
        w.insert(w.end(), k, 0);
        w.push_back(1);
        w.push_back(1);
        EXPECT_EQ(o.values[k], eval_dfao(m, digits_value(w, 3))) << k;
    }
    // The reported cycle repeats from the preperiod on.
    for (std::size_t k = o.preperiod; k < o.values.size(); ++k)
        EXPECT_EQ(o.values[k], o.cycle[(k - o.preperiod) % o.period]);
}

TEST(KernelAutomata, SameAlphabetAsTables) {
    for (const auto& name : dfao_names()) {
        const Dfao t = build_dfao(name, DfaoSource::table);
        const Dfao k = build_dfao(name, DfaoSource::recurrence);
        EXPECT_EQ(t.base, k.base);
        EXPECT_EQ(t.labels, k.labels);
        EXPECT_NO_THROW(k.validate());
    }
}

TEST(KernelAutomata, OrderThreeTableIsExact) {
    const Dfao t = build_dfao("r3-eps", DfaoSource::table);
    const Dfao k = build_dfao("r3-eps", DfaoSource::recurrence);
    for (std::uint64_t n = 1; n <= 200000; ++n) ASSERT_EQ(eval_dfao(t, n), eval_dfao(k, n)) << n;
}

TEST(KernelAutomata, TranscribedTablesBreakAtKnownPowers) {
    // Agreement holds below 4^6 and 5^5 and fails at those points.
    const Dfao t0 = build_dfao("r4-eps0"), k0 = build_dfao("r4-eps0", DfaoSource::recurrence);
    for (std::uint64_t n = 5; n < 4096; ++n) ASSERT_EQ(eval_dfao(t0, n), eval_dfao(k0, n)) << n;
    EXPECT_NE(eval_dfao(t0, 4096), eval_dfao(k0, 4096));

    const Dfao tu = build_dfao("r5-U"), ku = build_dfao("r5-U", DfaoSource::recurrence);
    for (std::uint64_t n = 3; n < 3125; ++n) ASSERT_EQ(eval_dfao(tu, n), eval_dfao(ku, n)) << n;
    EXPECT_NE(eval_dfao(tu, 3125), eval_dfao(ku, 3125));
}
