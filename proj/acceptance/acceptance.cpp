// One PASS/FAIL line per acceptance criterion. Exit status is nonzero when
// any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "agolomb/analysis.hpp"
#include "agolomb/correctors.hpp"
#include "agolomb/identities.hpp"
#include "agolomb/report_io.hpp"
#include "agolomb/structure.hpp"

using namespace agolomb;

namespace {

// Tolerances and budgets.
constexpr double kBudget1 = 5.0;
constexpr double kBudget3 = 30.0;
constexpr double kBudget4 = 10.0;
constexpr double kBudget5 = 5.0;
constexpr double kBudget6 = 10.0;
constexpr double kBudget7 = 20.0;
constexpr double kBudget8 = 300.0;
constexpr double kBudget9 = 5.0;
constexpr double kCesaroTolK22 = 5e-4;
constexpr double kRatioFinal = 1e-3;
constexpr unsigned kFlipsPerOrder = 100;
constexpr std::uint64_t kFlipSeed = 0x5eed2024;

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            notes.push_back("failed: " + what);
        }
    }
    void info(const std::string& what) { notes.push_back(what); }
};

std::string first_failure(const CheckReport& c) {
    std::ostringstream os;
    os << c.name << " violations " << c.violation_count << " checked " << c.checked;
    if (!c.samples.empty())
        os << " first n=" << c.samples[0].index << " expected " << c.samples[0].expected << " got "
           << c.samples[0].actual;
    return os.str();
}

void require_bundle(Outcome& o, const ReportBundle& b) {
    for (const auto& c : b.checks)
        if (!c.pass()) o.require(false, first_failure(c));
}

std::string as_text(const Sequence& a) {
    std::ostringstream os;
    write_sequence(os, a, SeqFormat::text);
    std::string s = os.str();
    if (!s.empty() && s.back() == '\n') s.pop_back();
    return s;
}

int run(int id, const char* title, double budget, const std::function<void(Outcome&)>& body) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (budget > 0 && secs > budget) {
        std::ostringstream os;
        os << "over budget: " << secs << " s > " << budget << " s";
        o.require(false, os.str());
    }
    std::printf("%s  %2d  %-44s %8.2f s\n", o.pass ? "PASS" : "FAIL", id, title, secs);
    for (const auto& n : o.notes) std::printf("          %s\n", n.c_str());
    std::fflush(stdout);
    return o.pass ? 0 : 1;
}

void criterion1(Outcome& o) {
    for (unsigned r = 2; r <= 10; ++r) {
        const DefinitionReport rep = verify_defining_property(generate_almost_golomb(r, 10000), r);
        o.require(rep.pass(), "order " + std::to_string(r) + " first violation " +
                                  std::to_string(rep.first_violation()));
    }
}

void criterion2(Outcome& o) {
    struct Case {
        const char* label;
        std::function<Sequence(std::size_t)> make;
        const char* printed;
    };
    const std::vector<Case> cases{
        {"order 2", [](std::size_t n) { return generate_almost_golomb(2, n); },
         "1,2,2,3,4,4,5,6,7,7,8,8,9,10,11,12,13,13,14,14,15,15,16,16"},
        {"order 3", [](std::size_t n) { return generate_almost_golomb(3, n); },
         "1,2,2,2,3,4,5,5,6,6,6,7,7,8,8,9,10,11,12,13,13,14,15,15"},
        {"order 4", [](std::size_t n) { return generate_almost_golomb(4, n); },
         "1,2,2,2,3,3,4,4,5,6,6,7,7,8,8,9,9,9,10,10,11,11,11,12"},
        {"Golomb", [](std::size_t n) { return golomb_sequence(n); }, "1,2,2,3,3,4,4,4,5,5,5,6,6,6,6,7,7,7,7"},
        {"gap 2", [](std::size_t n) { return generate_gap_variant(2, n); }, "1,2,2,3,3,4,5,6,6,7,7,8,8"},
    };
    for (const auto& c : cases) {
        const std::string want = c.printed;
        const std::size_t len = static_cast<std::size_t>(std::count(want.begin(), want.end(), ',')) + 1;
        const std::string got = as_text(c.make(len));
        o.require(got == want, std::string(c.label) + " prefix " + got + " != printed " + want);
    }
}

void criterion3(Outcome& o) {
    const Sequence a2 = generate_almost_golomb(2, 1000000);
    require_bundle(o, check_r2(a2));
    const Sequence a3 = generate_almost_golomb(3, 1000000);
    require_bundle(o, check_r3(a3, make_correctors(3, Method::recurrence, a3.size() / 3 + 2)));
    const Sequence a4 = generate_almost_golomb(4, 400000);
    require_bundle(o, check_r4(a4, make_correctors(4, Method::recurrence, a4.size() / 4 + 2)));
    const Sequence a5 = generate_almost_golomb(5, 400000);
    require_bundle(o, check_r5(a5, make_correctors(5, Method::recurrence, a5.size() / 5 + 2)));
}

void criterion4(Outcome& o) {
    constexpr std::uint64_t hi = 100000;
    for (unsigned r : {3u, 4u, 5u}) {
        const Sequence a = generate_almost_golomb(r, r * (hi + 8));
        const ReportBundle t = corrector_agreement(r, hi, &a, DfaoSource::table);
        require_bundle(o, t);
        for (const auto& c : t.checks) o.require(c.hi >= static_cast<std::int64_t>(hi), c.name + " short range");
        const ReportBundle k = corrector_agreement(r, hi, nullptr, DfaoSource::recurrence);
        o.info("order " + std::to_string(r) + " kernel automata vs recurrence: " + (k.pass() ? "agree" : "DISAGREE"));
        if (r == 5) {
            const CheckReport* d = t.find("r5.automata.recurrence_disjointness");
            o.require(d && d->pass(), "eps*eta = 0");
        }
    }
}

void criterion5(Outcome& o) {
    constexpr std::uint64_t m_hi = 20000;
    const ReportBundle b4 = r4_recurrence_sweep(generate_almost_golomb(4, 16 * m_hi + 64), m_hi);
    const ReportBundle b5 = r5_recurrence_sweep(generate_almost_golomb(5, 25 * m_hi + 128), m_hi);
    o.require(b4.checks.size() == 16, "sixteen order-4 identities");
    o.require(b5.checks.size() == 10, "ten order-5 identities");
    for (const ReportBundle* b : {&b4, &b5}) {
        require_bundle(o, *b);
        for (const auto& c : b->checks)
            o.require(c.hi >= static_cast<std::int64_t>(m_hi) && c.unchecked == 0, c.name + " did not reach m_hi");
    }
}

void criterion6(Outcome& o) {
    for (unsigned r = 2; r <= 5; ++r) {
        const RatioReport rep = ratio_pivots(r, generate_almost_golomb(r, 1000000));
        o.require(!rep.families.empty(), "order " + std::to_string(r) + " has no families");
        for (const auto& f : rep.families) {
            o.require(!f.skipped, f.family + " skipped");
            o.require(f.check.pass(), f.family + ": " + first_failure(f.check));
            if (f.limit > 0 && !f.ratios.empty()) {
                const double err = std::fabs(f.ratios.back().second - f.limit);
                o.require(err <= kRatioFinal, f.family + " final error " + std::to_string(err));
            }
        }
    }
}

void criterion7(Outcome& o) {
    const unsigned k = 22;
    const Sequence a = generate_almost_golomb(2, std::size_t{3} << (k - 1));
    const CesaroReport c = cesaro_r2(a, k, 3, 16);
    const CesaroRow& last = c.rows.back();
    o.require(last.k == k, "last row is k=22");
    o.require(last.err1 <= kCesaroTolK22, "|C_{2^22} - L1| = " + std::to_string(last.err1));
    o.require(last.err2 <= kCesaroTolK22, "|C_{3*2^21} - L2| = " + std::to_string(last.err2));
    const bool positive = kCesaroL1 > kCesaroL2;
    for (const auto& row : c.rows)
        if (row.k >= 16) o.require((row.c_pow > row.c_three) == positive, "separation sign at k=" + std::to_string(row.k));
    std::ostringstream os;
    os.precision(3);
    os << "k=22 errors " << std::scientific << last.err1 << ", " << last.err2;
    o.info(os.str());
}

void criterion8(Outcome& o) {
    const MetaReport m = meta_structure(200);
    o.require(m.stabilized(), "unstabilized orders present");
    o.require(m.table_M.pass() && m.table_M.lo == 2 && m.table_M.hi >= 50, first_failure(m.table_M));
    o.require(m.table_j.pass() && m.table_j.checked == 28, first_failure(m.table_j));
    o.require(m.table_gaps.pass() && m.table_gaps.checked >= 27, first_failure(m.table_gaps));
    o.require(m.gap_law.pass() && m.gap_law.lo <= 4 && m.gap_law.hi >= 29, first_failure(m.gap_law));
    o.require(m.prefix.pass() && m.prefix.lo == 3 && m.prefix.hi == 200, first_failure(m.prefix));
    o.require(m.domination.pass() && m.domination.lo == 5 && m.domination.hi == 200, first_failure(m.domination));
    o.require(m.exceptions.pass(), first_failure(m.exceptions));
}

void criterion9(Outcome& o) {
    for (unsigned r = 2; r <= 6; ++r) {
        const WindowReport w = window_determinism_check(generate_almost_golomb(r, 100000), r);
        o.require(w.pass(), "order " + std::to_string(r) + " conflicting windows");
        for (std::size_t d = 0; d < w.distinct_windows.size(); ++d)
            o.require(w.distinct_windows[d] > 0, "order " + std::to_string(r) + " residue " + std::to_string(d) + " unseen");
    }
}

void criterion10(Outcome& o) {
    constexpr std::size_t N = 4000;
    std::mt19937_64 rng(kFlipSeed);
    for (unsigned r = 2; r <= 5; ++r) {
        const Sequence a = generate_almost_golomb(r, N);
        std::uniform_int_distribution<std::size_t> pos(1, N - r);
        std::bernoulli_distribution up(0.5);
        unsigned caught = 0;
        for (unsigned t = 0; t < kFlipsPerOrder; ++t) {
            const std::size_t k = pos(rng);
            const u64 v = a.at(k);
            const u64 w = up(rng) || v == 1 ? v + 1 : v - 1;
            const ReportBundle b = run_suite(a.with_term(k, w), r, Suite::all);
            if (!b.pass()) ++caught;
            else o.require(false, "order " + std::to_string(r) + " flip at " + std::to_string(k) + " undetected");
        }
        o.info("order " + std::to_string(r) + ": " + std::to_string(caught) + "/" + std::to_string(kFlipsPerOrder) +
               " flips detected");
    }
}

}  // namespace

int main() {
    int failed = 0;
    failed += run(1, "oracle equivalence, r=2..10, N=1e4", kBudget1, criterion1);
    failed += run(2, "printed prefixes", 0, criterion2);
    failed += run(3, "denesting suites r=2..5", kBudget3, criterion3);
    failed += run(4, "corrector method agreement, n<=1e5", kBudget4, criterion4);
    failed += run(5, "order 4/5 recurrence sweeps, m<=2e4", kBudget5, criterion5);
    failed += run(6, "ratio identities at N=1e6", kBudget6, criterion6);
    failed += run(7, "Cesaro means at k=22", kBudget7, criterion7);
    failed += run(8, "Table 1 and conjectures, R=200", kBudget8, criterion8);
    failed += run(9, "window determinism, r=2..6, N=1e5", kBudget9, criterion9);
    failed += run(10, "perturbation sensitivity", 0, criterion10);
    std::printf("%d of 10 criteria failed\n", failed);
    return failed == 0 ? 0 : 1;
}
