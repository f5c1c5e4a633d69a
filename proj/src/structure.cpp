#include "agolomb/structure.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

namespace agolomb {

namespace {

constexpr u64 kMinimalityProbeCap = 64;

i64 sdiff(const Sequence& a, i64 k) {
    return static_cast<i64>(a(k + 1)) - static_cast<i64>(a(k));
}

}  // namespace

std::int64_t DefinitionReport::first_violation() const {
    std::int64_t best = -1;
    for (const auto* c : {&monotone, &anchor, &minimality}) {
        const auto f = c->first_index();
        if (f >= 0 && (best < 0 || f < best)) best = f;
    }
    return best;
}

ReportBundle DefinitionReport::bundle() const {
    ReportBundle b;
    b.title = "definition";
    b.add(monotone);
    b.add(anchor);
    b.add(minimality);
    return b;
}

DefinitionReport verify_defining_property(const Sequence& a, unsigned r, Exec exec) {
    const i64 N = static_cast<i64>(a.size());
    DefinitionReport out;

    out.monotone = sweep("definition.monotone", 1, N - 1, exec, [&](i64 n, CheckReport& rep) {
        rep.tick();
        if (a(n + 1) < a(n)) rep.record(n, static_cast<i64>(a(n)), static_cast<i64>(a(n + 1)));
    });

    out.anchor = sweep("definition.anchor", 1, N, exec, [&](i64 n, CheckReport& rep) {
        const u64 S = window_sum(a, n, r);
        if (S == 0 || S > static_cast<u64>(N)) {
            ++rep.unchecked;
            return;
        }
        rep.tick();
        const u64 v = a(static_cast<i64>(S));
        if (v != static_cast<u64>(n)) rep.record(n, n, static_cast<i64>(v));
    });

    out.minimality = sweep("definition.minimality", 1, N, exec, [&](i64 n, CheckReport& rep) {
        const u64 lo = a(n - 1), hi = a(n);
        if (hi <= lo) {
            rep.tick();
            return;
        }
        const u64 rest = window_sum(a, n, r) - hi;  // a(n-1) + ... + a(n-r+1)
        bool any = false;
        u64 probes = 0;
        for (u64 m = lo; m < hi; ++m) {
            if (++probes > kMinimalityProbeCap) {
                ++rep.unchecked;
                break;
            }
            const u64 p = m + rest;
            if (p == 0) continue;
            if (p > static_cast<u64>(N)) {
                ++rep.unchecked;
                continue;
            }
            any = true;
            // Only a(n) is replaced by m; a probe landing on n reads m itself.
            const u64 at = p == static_cast<u64>(n) ? m : a(static_cast<i64>(p));
            if (at == static_cast<u64>(n)) {
                rep.record(n, static_cast<i64>(hi), static_cast<i64>(m));
                break;
            }
        }
        if (any) rep.tick();
    });
    return out;
}

ReportBundle structural_invariants(const Sequence& a, unsigned r) {
    ReportBundle b;
    b.title = "structure";
    const i64 N = static_cast<i64>(a.size());

    CheckReport first = CheckReport::named("structure.a1_is_one", 1, 1);
    first.tick();
    if (a(1) != 1) first.record(1, 1, static_cast<i64>(a(1)));
    b.add(first);

    b.add(sweep("structure.unit_increments", 1, N - 1, Exec::serial, [&](i64 n, CheckReport& rep) {
        rep.tick();
        const i64 d = sdiff(a, n);
        if (d != 0 && d != 1) rep.record(n, 1, d);
    }));

    b.add(sweep("structure.subdiagonal", 3, N, Exec::serial, [&](i64 n, CheckReport& rep) {
        rep.tick();
        if (a(n) > static_cast<u64>(n - 1)) rep.record(n, n - 1, static_cast<i64>(a(n)));
    }));

    const RunTable rt = run_table(a, r);
    CheckReport rtc = CheckReport::named("structure.run_length_identity", 3, static_cast<i64>(rt.max_value()));
    rtc.tick(rt.max_value() >= 3 ? rt.max_value() - 2 : 0);
    for (u64 m : rt.mismatched_values) rtc.record(static_cast<i64>(m), 0, 1);
    if (rtc.checked == 0 && !rt.mismatched_values.empty()) rtc.tick();
    b.add(rtc);

    CheckReport mono = CheckReport::named("structure.anchor_monotone", 2, static_cast<i64>(rt.max_value()));
    for (std::size_t i = 1; i < rt.entries.size(); ++i) {
        mono.tick();
        if (rt.entries[i].anchor <= rt.entries[i - 1].anchor)
            mono.record(static_cast<i64>(i + 1), static_cast<i64>(rt.entries[i - 1].anchor + 1),
                        static_cast<i64>(rt.entries[i].anchor));
    }
    b.add(mono);

    // a(S_m) = m and a(S_m - 1) = m - 1 pins the run of m to start exactly at S_m
    b.add(sweep("structure.run_interval_exact", 3, N, Exec::serial, [&](i64 m, CheckReport& rep) {
        const u64 S = window_sum(a, m, r);
        if (S < 2 || S > static_cast<u64>(N)) {
            ++rep.unchecked;
            return;
        }
        rep.tick();
        const i64 s = static_cast<i64>(S);
        if (a(s) != static_cast<u64>(m)) rep.record(m, m, static_cast<i64>(a(s)));
        else if (a(s - 1) != static_cast<u64>(m - 1)) rep.record(m, m - 1, static_cast<i64>(a(s - 1)));
    }));
    return b;
}

CheckReport nested_anchor_check(const Sequence& a, unsigned r, Exec exec) {
    const i64 N = static_cast<i64>(a.size());
    const i64 ri = static_cast<i64>(r);
    const i64 rmax = ri * (ri - 1) / 2;
    return sweep("structure.nested_anchor", 1, N, exec, [&](i64 n, CheckReport& rep) {
        const u64 S = window_sum(a, n, r);
        if (S == 0 || S > static_cast<u64>(N)) {
            ++rep.unchecked;
            return;
        }
        const i64 s = static_cast<i64>(S);
        const u64 SS = window_sum(a, s, r);
        if (SS > static_cast<u64>(N)) {
            ++rep.unchecked;
            return;
        }
        rep.tick();
        i64 R = 0;
        for (i64 j = 1; j <= ri - 1; ++j) R += (ri - j) * sdiff(a, s - j);
        if (R < 0 || R > rmax) rep.record(n, rmax, R);
        else if (static_cast<i64>(SS) != ri * n - R) rep.record(n, ri * n - R, static_cast<i64>(SS));
    });
}

bool WindowReport::pass() const {
    for (auto c : conflicts)
        if (c != 0) return false;
    return true;
}

std::size_t WindowReport::total_windows() const {
    std::size_t t = 0;
    for (auto w : distinct_windows) t += w;
    return t;
}

WindowReport window_determinism_check(const Sequence& a, unsigned r, Exec exec) {
    WindowReport wr;
    wr.order = r;
    wr.C = 2 * static_cast<int>(r) - 3;
    wr.D = static_cast<int>(r * (r + 1) / 2) - 1;
    wr.n0 = std::max<i64>(r + 1, 2 * static_cast<i64>(r) - 3);
    wr.distinct_windows.assign(r, 0);
    wr.conflicts.assign(r, 0);
    wr.first_conflict.assign(r, -1);

    const i64 N = static_cast<i64>(a.size());
    const i64 ri = static_cast<i64>(r);
    // d(k) is known for 0 <= k <= N-1
    const i64 last = N - 1;
    const int width = wr.C + wr.D + 1;

#pragma omp parallel for schedule(dynamic, 1) num_threads(worker_count()) if (exec == Exec::parallel)
    for (i64 i = 0; i < ri; ++i) {
        std::unordered_map<std::string, i64> seen;
        std::string key(static_cast<std::size_t>(width), '\0');
        std::uint64_t conflicts = 0;
        i64 first = -1;
        for (i64 n = wr.n0; n + wr.D <= last && ri * n + i <= last; ++n) {
            for (int t = 0; t < width; ++t) key[static_cast<std::size_t>(t)] = static_cast<char>(sdiff(a, n - wr.C + t));
            const i64 out = sdiff(a, ri * n + i);
            auto [it, inserted] = seen.emplace(key, out);
            if (!inserted && it->second != out) {
                ++conflicts;
                if (first < 0) first = n;
            }
        }
        wr.distinct_windows[static_cast<std::size_t>(i)] = seen.size();
        wr.conflicts[static_cast<std::size_t>(i)] = conflicts;
        wr.first_conflict[static_cast<std::size_t>(i)] = first;
    }
    return wr;
}

MultiplicityInfo multiplicity_info(const Sequence& a, unsigned r) {
    MultiplicityInfo mi;
    mi.order = r;
    mi.prefix_value = a.size() >= r ? a(r) : 0;
    const RunTable rt = run_table(a, r);
    mi.values_covered = rt.max_value();
    for (const auto& e : rt.entries) {
        if (e.length > mi.max_multiplicity) {
            mi.max_multiplicity = e.length;
            mi.argmax = e.value;
        }
    }
    mi.stabilized = mi.values_covered > 0 && mi.argmax <= mi.values_covered / 2;
    if (r >= 2 && r - 1 <= rt.max_value()) mi.boundary_run = rt.length(r - 1);
    if (r >= 4) mi.threshold_identity = mi.boundary_run == mi.prefix_value;
    return mi;
}

MultiplicityInfo prefix_and_max_multiplicity(unsigned r, std::size_t N) {
    return multiplicity_info(generate_almost_golomb(r, N), r);
}

}  // namespace agolomb
