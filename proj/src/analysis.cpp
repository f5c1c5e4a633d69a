#include "agolomb/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

#include "agolomb/structure.hpp"

namespace agolomb {

namespace {

using i128 = __int128;

i128 ipow(i128 b, unsigned e) {
    i128 p = 1;
    for (unsigned i = 0; i < e; ++i) p *= b;
    return p;
}

i64 narrow(i128 x) { return static_cast<i64>(x); }

struct Neumaier {
    double sum = 0;
    double comp = 0;

    void add(double x) {
        const double t = sum + x;
        if (std::fabs(sum) >= std::fabs(x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
    }
    double value() const { return sum + comp; }
};

RatioFamily family(std::string name, std::string identity, unsigned k_lo) {
    RatioFamily f;
    f.family = std::move(name);
    f.identity = std::move(identity);
    f.check = CheckReport::named(f.identity, k_lo, static_cast<i64>(k_lo) - 1);
    return f;
}

void finish(RatioFamily& f, unsigned min_points) {
    if (f.check.checked < min_points) {
        f.skipped = true;
        f.notice = "fewer than " + std::to_string(min_points) + " values of k within N";
    }
}

// |ratio - limit| strictly decreasing in k, final distance <= 1e-3.
void convergence(RatioFamily& f, double limit) {
    f.limit = limit;
    for (std::size_t i = 1; i < f.ratios.size(); ++i) {
        const double prev = std::fabs(f.ratios[i - 1].second - limit);
        const double cur = std::fabs(f.ratios[i].second - limit);
        if (!(cur < prev)) {
            f.check.record(f.ratios[i].first, 1, 0);
            f.notice = "distance to limit not decreasing";
        }
    }
    if (!f.ratios.empty() && std::fabs(f.ratios.back().second - limit) > 1e-3) {
        f.check.record(f.ratios.back().first, 1, 0);
        f.notice = "final distance to limit above 1e-3";
    }
}

}  // namespace

bool RatioReport::pass() const {
    bool any = false;
    for (const auto& f : families) {
        if (f.skipped) continue;
        any = true;
        if (!f.check.pass()) return false;
    }
    return any;
}

RatioReport ratio_pivots(unsigned r, const Sequence& a) {
    const i128 N = static_cast<i128>(a.size());
    auto A = [&](i128 n) -> i128 { return static_cast<i128>(a(static_cast<i64>(n))); };
    RatioReport rep;
    rep.order = r;

    switch (r) {
        case 2: {
            RatioFamily p = family("a(2^k)", "4*a(2^k) = 3*2^k", 2);
            RatioFamily q = family("a(3*2^(k-1))", "a(3*2^(k-1)) = 2^k", 2);
            for (unsigned k = 2; k < 62; ++k) {
                const i128 n = ipow(2, k);
                if (n <= N) {
                    p.check.hi = k;
                    p.check.tick();
                    if (4 * A(n) != 3 * n) p.check.record(k, narrow(3 * n), narrow(4 * A(n)));
                    p.ratios.emplace_back(k, static_cast<double>(A(n)) / static_cast<double>(n));
                }
                const i128 m = 3 * n / 2;
                if (m <= N) {
                    q.check.hi = k;
                    q.check.tick();
                    if (A(m) != n) q.check.record(k, narrow(n), narrow(A(m)));
                    q.ratios.emplace_back(k, static_cast<double>(A(m)) / static_cast<double>(m));
                }
            }
            p.limit = 0.75;
            q.limit = 2.0 / 3.0;
            rep.families = {p, q};
            break;
        }
        case 3: {
            RatioFamily p = family("a(5*3^k)", "15*a(5*3^k) = 8*5*3^k", 1);
            RatioFamily q = family("a(8*3^k)", "a(8*3^k) = 15*3^(k-1)", 1);
            for (unsigned k = 1; k < 40; ++k) {
                const i128 t = ipow(3, k);
                if (5 * t <= N) {
                    p.check.hi = k;
                    p.check.tick();
                    if (15 * A(5 * t) != 40 * t) p.check.record(k, narrow(40 * t), narrow(15 * A(5 * t)));
                    p.ratios.emplace_back(k, static_cast<double>(A(5 * t)) / static_cast<double>(5 * t));
                }
                if (8 * t <= N) {
                    q.check.hi = k;
                    q.check.tick();
                    if (3 * A(8 * t) != 15 * t) q.check.record(k, narrow(5 * t), narrow(A(8 * t)));
                    q.ratios.emplace_back(k, static_cast<double>(A(8 * t)) / static_cast<double>(8 * t));
                }
            }
            p.limit = 8.0 / 15.0;
            q.limit = 15.0 / 24.0;
            rep.families = {p, q};
            break;
        }
        case 4: {
            RatioFamily base = family("a(64)", "A_3 = a(64) = 34", 3);
            RatioFamily rec = family("A_k = a(4^k)", "A_(k+1) = 4*A_k - 2", 3);
            RatioFamily closed = family("A_k = a(4^k)", "48*A_k = 25*4^k + 32", 3);
            RatioFamily seven = family("a(7*4^k)", "|a(7*4^k)/(7*4^k) - 10/21| decreasing", 0);
            if (N >= 64) {
                base.check.hi = 3;
                base.check.tick();
                if (A(64) != 34) base.check.record(3, 34, narrow(A(64)));
            }
            for (unsigned k = 3; k < 31; ++k) {
                const i128 n = ipow(4, k);
                if (n > N) break;
                closed.check.hi = k;
                closed.check.tick();
                if (48 * A(n) != 25 * n + 32) closed.check.record(k, narrow(25 * n + 32), narrow(48 * A(n)));
                closed.ratios.emplace_back(k, static_cast<double>(A(n)) / static_cast<double>(n));
                if (4 * n <= N) {
                    rec.check.hi = k;
                    rec.check.tick();
                    if (A(4 * n) != 4 * A(n) - 2) rec.check.record(k, narrow(4 * A(n) - 2), narrow(A(4 * n)));
                }
            }
            for (unsigned k = 0; k < 31; ++k) {
                const i128 n = 7 * ipow(4, k);
                if (n > N) break;
                seven.check.hi = k;
                seven.check.tick();
                seven.ratios.emplace_back(k, static_cast<double>(A(n)) / static_cast<double>(n));
            }
            closed.limit = 25.0 / 48.0;
            convergence(seven, 10.0 / 21.0);
            rep.families = {base, rec, closed, seven};
            break;
        }
        case 5: {
            RatioFamily rec = family("A_k = a(5^k)", "A_(k+1) = 5*A_k - 1 (k even), 5*A_k - 4 (k odd)", 2);
            RatioFamily brec = family("B_k = a(2*5^k)", "B_(k+1) = 5*B_k - 1", 2);
            RatioFamily alim = family("a(5^k)", "|a(5^k)/5^k - 93/200| decreasing", 2);
            RatioFamily blim = family("a(2*5^k)", "|a(2*5^k)/(2*5^k) - 87/200| decreasing", 2);
            for (unsigned k = 2; k < 27; ++k) {
                const i128 n = ipow(5, k);
                if (n <= N) {
                    alim.check.hi = k;
                    alim.check.tick();
                    alim.ratios.emplace_back(k, static_cast<double>(A(n)) / static_cast<double>(n));
                }
                if (5 * n <= N) {
                    rec.check.hi = k;
                    rec.check.tick();
                    const i128 want = 5 * A(n) - (k % 2 == 0 ? 1 : 4);
                    if (A(5 * n) != want) rec.check.record(k, narrow(want), narrow(A(5 * n)));
                    rec.ratios.emplace_back(k, static_cast<double>(A(n)) / static_cast<double>(n));
                }
                if (2 * n <= N) {
                    blim.check.hi = k;
                    blim.check.tick();
                    blim.ratios.emplace_back(k, static_cast<double>(A(2 * n)) / static_cast<double>(2 * n));
                }
                if (10 * n <= N) {
                    brec.check.hi = k;
                    brec.check.tick();
                    if (A(10 * n) != 5 * A(2 * n) - 1) brec.check.record(k, narrow(5 * A(2 * n) - 1), narrow(A(10 * n)));
                }
            }
            rec.limit = 93.0 / 200.0;
            convergence(alim, 93.0 / 200.0);
            convergence(blim, 87.0 / 200.0);
            rep.families = {rec, brec, alim, blim};
            break;
        }
        default: throw std::invalid_argument("ratio pivots exist for orders 2..5");
    }
    for (auto& f : rep.families) finish(f, f.family == "a(64)" ? 1 : 3);
    return rep;
}

// ---- Cesaro -----------------------------------------------------------------

// Offline maximum of |C - L| * 2^k / k over 3 <= k <= 22 for both limits
// (0.2291, attained at k = 3), rounded up.
const double kCesaroC = 0.23;

double cesaro_l1() { return 0.75 + std::log(std::pow(6.0, 0.75) / 4.0); }
double cesaro_l2() { return 2.0 / 3.0 + std::log(std::pow(3.0, 2.0 / 3.0) / 2.0); }

double cesaro_tolerance(unsigned k) {
    return std::max(kCesaroFloor, kCesaroC * static_cast<double>(k) / std::ldexp(1.0, static_cast<int>(k)));
}

double cesaro_mean(const Sequence& a, std::size_t N) {
    if (N == 0 || N > a.size()) throw std::out_of_range("cesaro_mean: N outside the sequence");
    Neumaier s;
    for (std::size_t n = 1; n <= N; ++n) s.add(static_cast<double>(a.at(n)) / static_cast<double>(n));
    return s.value() / static_cast<double>(N);
}

CesaroReport cesaro_r2(const Sequence& a, unsigned k_max, unsigned k_min, unsigned sep_from, Exec exec) {
    if (k_min < 2 || k_max < k_min || k_max > 40) throw std::invalid_argument("cesaro_r2: bad k range");
    const std::size_t need = std::size_t{3} << (k_max - 1);
    if (a.size() < need)
        throw std::invalid_argument("cesaro_r2 needs N >= 3*2^(k_max-1) = " + std::to_string(need));

    std::set<std::size_t> cps;
    for (unsigned k = k_min; k <= k_max; ++k) {
        cps.insert(std::size_t{1} << k);
        cps.insert(std::size_t{3} << (k - 1));
    }
    const std::vector<std::size_t> cp(cps.begin(), cps.end());
    std::vector<Neumaier> seg(cp.size());
    const auto body = [&](std::size_t i) {
        const std::size_t from = i == 0 ? 1 : cp[i - 1] + 1;
        for (std::size_t n = from; n <= cp[i]; ++n)
            seg[i].add(static_cast<double>(a.at(n)) / static_cast<double>(n));
    };
    const long count = static_cast<long>(cp.size());
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 1) num_threads(worker_count())
        for (long i = 0; i < count; ++i) body(static_cast<std::size_t>(i));
    } else {
        for (long i = 0; i < count; ++i) body(static_cast<std::size_t>(i));
    }
    std::map<std::size_t, double> mean;
    Neumaier run;
    for (std::size_t i = 0; i < cp.size(); ++i) {
        run.add(seg[i].sum);
        run.add(seg[i].comp);
        mean[cp[i]] = run.value() / static_cast<double>(cp[i]);
    }

    CesaroReport rep;
    rep.k_min = k_min;
    rep.k_max = k_max;
    rep.sep_from = sep_from;
    rep.limits = CheckReport::named("r2.cesaro.limits", k_min, k_max);
    rep.separation = CheckReport::named("r2.cesaro.separation", std::max(sep_from, k_min), k_max);
    const double L1 = cesaro_l1(), L2 = cesaro_l2();
    for (unsigned k = k_min; k <= k_max; ++k) {
        CesaroRow row;
        row.k = k;
        row.c_pow = mean.at(std::size_t{1} << k);
        row.c_three = mean.at(std::size_t{3} << (k - 1));
        row.err1 = std::fabs(row.c_pow - L1);
        row.err2 = std::fabs(row.c_three - L2);
        row.tol = cesaro_tolerance(k);
        row.within = row.err1 <= row.tol && row.err2 <= row.tol;
        row.separated = row.c_pow > row.c_three;
        rep.limits.tick();
        if (!row.within) rep.limits.record(k, 1, 0);
        if (k >= sep_from) {
            rep.separation.tick();
            if (!row.separated) rep.separation.record(k, 1, 0);
        }
        rep.rows.push_back(row);
    }
    if (rep.rows.size() >= 5) {
        for (std::size_t i = rep.rows.size() - 4; i < rep.rows.size(); ++i) {
            const double prev = std::max(rep.rows[i - 1].err1, rep.rows[i - 1].err2);
            const double cur = std::max(rep.rows[i].err1, rep.rows[i].err2);
            if (cur > prev) {
                rep.warning = true;
                rep.warning_text = "error grows from k=" + std::to_string(rep.rows[i - 1].k) + " to k=" +
                                   std::to_string(rep.rows[i].k);
            }
        }
    }
    return rep;
}

// ---- oscillation ------------------------------------------------------------

std::vector<OscillationWindow> oscillation_profile(const Sequence& a, unsigned window_count) {
    const std::uint64_t N = a.size();
    if (N < 2 || window_count == 0) return {};
    const std::uint64_t lo = std::max<std::uint64_t>(1, N / 2);
    const std::uint64_t span = N - lo + 1;
    const std::uint64_t W = std::min<std::uint64_t>(window_count, span);
    std::vector<OscillationWindow> out;
    for (std::uint64_t w = 0; w < W; ++w) {
        OscillationWindow win;
        win.lo = lo + span * w / W;
        win.hi = lo + span * (w + 1) / W - 1;
        win.min_ratio = 1e300;
        win.max_ratio = -1e300;
        for (std::uint64_t n = win.lo; n <= win.hi; ++n) {
            const double q = static_cast<double>(a.at(n)) / static_cast<double>(n);
            win.min_ratio = std::min(win.min_ratio, q);
            win.max_ratio = std::max(win.max_ratio, q);
        }
        out.push_back(win);
    }
    return out;
}

double golomb_asymptotic_deviation(const Sequence& g, std::uint64_t n_lo) {
    const double c = std::pow(kPhi, 2.0 - kPhi);
    double worst = 0;
    for (std::uint64_t n = std::max<std::uint64_t>(1, n_lo); n <= g.size(); ++n) {
        const double model = c * std::pow(static_cast<double>(n), kPhi - 1.0);
        worst = std::max(worst, std::fabs(static_cast<double>(g.at(n)) / model - 1.0));
    }
    return worst;
}

// ---- meta-structure ---------------------------------------------------------

const std::vector<unsigned>& Table1::M() {
    static const std::vector<unsigned> v{2, 3, 3, 3, 3, 4, 4, 4, 5, 5, 5, 6, 6, 6, 6, 7, 7, 7, 7, 8, 8, 8, 8, 9, 9, 9, 9, 9, 10, 10, 10, 10, 10, 11, 11, 11, 11, 11, 12, 12, 12, 12, 12, 12, 13, 13, 13, 13, 13};
    return v;
}

const std::vector<unsigned>& Table1::j() {
    static const std::vector<unsigned> v{3, 7, 10, 13, 17, 21, 25, 30, 35, 40, 46, 52, 58, 64, 71, 78, 85, 92, 100, 108, 116, 124, 133, 142, 151, 160, 169, 179};
    return v;
}

const std::vector<unsigned>& Table1::gaps() {
    static const std::vector<unsigned> v{4, 3, 3, 4, 4, 4, 5, 5, 5, 6, 6, 6, 6, 7, 7, 7, 8, 8, 8, 8, 9, 9, 9, 9, 9, 10, 10, 10};
    return v;
}

const std::vector<unsigned>& Table1::G() {
    static const std::vector<unsigned> v{2, 3, 3, 4, 4, 4, 5, 5, 5, 6, 6, 6, 6, 7, 7, 7, 7, 8, 8, 8, 8, 9, 9, 9, 9, 9, 10, 10};
    return v;
}

std::size_t default_meta_terms(unsigned r) { return std::max<std::size_t>(200000, std::size_t{4000} * r); }

unsigned MetaReport::j(unsigned k) const {
    for (const auto& t : thresholds)
        if (t.k == k) return t.j;
    return 0;
}

bool MetaReport::conjectures_hold() const {
    return gap_law.pass() && partial_sum.pass() && prefix.pass() && domination.pass() && exceptions.pass();
}

ReportBundle MetaReport::bundle() const {
    ReportBundle b;
    b.title = "meta-structure up to order " + std::to_string(r_max);
    for (const CheckReport* c :
         {&table_M, &table_j, &table_gaps, &table_G, &gap_law, &partial_sum, &prefix, &domination, &exceptions})
        b.add(*c);
    return b;
}

MetaReport meta_structure(unsigned r_max, std::size_t terms, unsigned k_floor, Exec exec) {
    if (r_max < 2) throw std::invalid_argument("meta_structure needs r_max >= 2");
    MetaReport rep;
    rep.r_max = r_max;
    rep.k_floor = k_floor;
    rep.orders.resize(r_max - 1);

    const auto one = [&](unsigned r) {
        OrderRow& row = rep.orders[r - 2];
        row.r = r;
        row.terms = terms ? terms : default_meta_terms(r);
        const MultiplicityInfo mi = prefix_and_max_multiplicity(r, row.terms);
        row.M = mi.max_multiplicity;
        row.stabilized = mi.stabilized;
        row.prefix = mi.prefix_value;
        row.boundary_run = mi.boundary_run;
        row.argmax = mi.argmax;
    };
    const long count = static_cast<long>(r_max) - 1;
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 1) num_threads(worker_count())
        for (long i = 0; i < count; ++i) one(static_cast<unsigned>(i + 2));
    } else {
        for (long i = 0; i < count; ++i) one(static_cast<unsigned>(i + 2));
    }
    for (const auto& row : rep.orders)
        if (!row.stabilized) rep.unstabilized.push_back(row.r);

    const GolombPair gp = generate_golomb(std::max<std::size_t>(r_max, 64));
    rep.golomb_G = gp.G;
    rep.golomb_S = gp.S;

    // Thresholds from the stabilized prefix of orders only.
    unsigned r_trust = r_max;
    if (!rep.unstabilized.empty()) r_trust = rep.unstabilized.front() - 1;
    std::uint64_t top = 0;
    for (unsigned r = 2; r <= r_trust; ++r) top = std::max(top, rep.orders[r - 2].M);
    for (unsigned k = 1; k <= top; ++k) {
        for (unsigned r = 2; r <= r_trust; ++r) {
            if (rep.orders[r - 2].M >= k) {
                rep.thresholds.push_back({k, r});
                break;
            }
        }
    }

    rep.table_M = CheckReport::named("meta.table1.M", 2, std::min<unsigned>(50, r_max));
    for (unsigned r = 2; r <= std::min<unsigned>(50, r_max); ++r) {
        const OrderRow& row = rep.orders[r - 2];
        if (!row.stabilized) {
            ++rep.table_M.unchecked;
            continue;
        }
        rep.table_M.tick();
        if (row.M != Table1::M()[r - 2]) rep.table_M.record(r, Table1::M()[r - 2], static_cast<i64>(row.M));
    }

    rep.table_j = CheckReport::named("meta.table1.j", 3, 30);
    rep.table_gaps = CheckReport::named("meta.table1.gaps", 3, 30);
    for (unsigned k = 3; k <= 30; ++k) {
        const unsigned jk = rep.j(k), jn = rep.j(k + 1);
        if (jk) {
            rep.table_j.tick();
            if (jk != Table1::j()[k - 3]) rep.table_j.record(k, Table1::j()[k - 3], jk);
        } else {
            ++rep.table_j.unchecked;
        }
        if (jk && jn) {
            rep.table_gaps.tick();
            if (jn - jk != Table1::gaps()[k - 3]) rep.table_gaps.record(k, Table1::gaps()[k - 3], jn - jk);
        } else {
            ++rep.table_gaps.unchecked;
        }
    }

    rep.table_G = CheckReport::named("meta.table1.G", 3, 30);
    for (unsigned k = 3; k <= 30; ++k) {
        rep.table_G.tick();
        if (gp.g(k) != Table1::G()[k - 3]) rep.table_G.record(k, Table1::G()[k - 3], static_cast<i64>(gp.g(k)));
    }

    rep.gap_law = CheckReport::named("meta.conjecture.gap_law", k_floor, 0);
    rep.partial_sum = CheckReport::named("meta.conjecture.partial_sum", 4, 0);
    for (const auto& t : rep.thresholds) {
        const unsigned k = t.k;
        if (k >= 4) {
            rep.partial_sum.hi = k;
            rep.partial_sum.tick();
            const i64 want = static_cast<i64>(gp.s(k - 1)) + 2;
            if (t.j != want) rep.partial_sum.record(k, want, t.j);
        }
        const unsigned jn = rep.j(k + 1);
        if (k >= k_floor && jn) {
            rep.gap_law.hi = k;
            rep.gap_law.tick();
            const i64 want = static_cast<i64>(gp.g(k));
            if (static_cast<i64>(jn - t.j) != want) rep.gap_law.record(k, want, jn - t.j);
        }
    }

    rep.prefix = CheckReport::named("meta.conjecture.prefix", 3, r_max);
    rep.domination = CheckReport::named("meta.conjecture.domination", 5, r_max);
    for (unsigned r = 3; r <= r_max; ++r) {
        const OrderRow& row = rep.orders[r - 2];
        rep.prefix.tick();
        if (row.prefix != gp.g(r - 1)) rep.prefix.record(r, static_cast<i64>(gp.g(r - 1)), static_cast<i64>(row.prefix));
        if (r >= 5) {
            if (!row.stabilized) {
                ++rep.domination.unchecked;
                continue;
            }
            rep.domination.tick();
            if (row.M != row.boundary_run)
                rep.domination.record(r, static_cast<i64>(row.M), static_cast<i64>(row.boundary_run));
        }
    }

    // Documented exceptions: index 1 = first gap, 3 = N_3(2), 4 = order 4.
    rep.exceptions = CheckReport::named("meta.exceptions", 1, 4);
    if (rep.j(3) && rep.j(4)) {
        rep.exceptions.tick();
        if (rep.j(4) - rep.j(3) != 4) rep.exceptions.record(1, 4, rep.j(4) - rep.j(3));
    }
    if (r_max >= 3) {
        rep.exceptions.tick();
        if (rep.orders[1].boundary_run != 3) rep.exceptions.record(3, 3, static_cast<i64>(rep.orders[1].boundary_run));
    }
    if (r_max >= 4) {
        rep.exceptions.tick();
        const OrderRow& r4 = rep.orders[2];
        if (r4.M != 3 || r4.boundary_run != 2) rep.exceptions.record(4, 32, static_cast<i64>(r4.M * 10 + r4.boundary_run));
    }
    return rep;
}

}  // namespace agolomb
