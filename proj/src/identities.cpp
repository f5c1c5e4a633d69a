#include "agolomb/identities.hpp"

#include <algorithm>
#include <set>

#include "agolomb/structure.hpp"

namespace agolomb {

namespace {

using i128 = __int128;

i64 pow_i(i64 b, unsigned e) {
    i64 p = 1;
    for (unsigned i = 0; i < e; ++i) p *= b;
    return p;
}

struct View {
    const Sequence& a;
    i64 N;
    explicit View(const Sequence& s) : a(s), N(static_cast<i64>(s.size())) {}
    i64 operator()(i64 k) const { return static_cast<i64>(a(k)); }
    i64 d(i64 k) const { return (*this)(k + 1) - (*this)(k); }
    bool has(i64 k) const { return k <= N; }
};

// Positional run lengths for values 1..max, 0 where unknown.
std::vector<i64> run_lengths(const Sequence& a, unsigned r) {
    const RunTable rt = run_table(a, r);
    std::vector<i64> L(rt.entries.size() + 1, 0);
    for (const auto& e : rt.entries) L[e.value] = static_cast<i64>(e.length);
    return L;
}

CheckReport single(std::string name, i64 lo, i64 hi) { return CheckReport::named(std::move(name), lo, hi); }

}  // namespace

// ---- order 2 ----------------------------------------------------------------

ReportBundle check_r2(const Sequence& a, Exec exec) {
    View A(a);
    const i64 N = A.N;
    ReportBundle b;
    b.title = "order 2";

    b.add(sweep("r2.denesting.dyadic_block", 4, N, exec, [&](i64 n, CheckReport& rep) {
        unsigned k = 63 - static_cast<unsigned>(__builtin_clzll(static_cast<u64>(n)));
        const i64 p = i64{1} << k, j = n - p;
        const i64 want = j <= p / 2 ? 3 * (p / 4) + (j + 1) / 2 : n - p / 2;
        rep.tick();
        if (A(n) != want) rep.record(n, want, A(n));
    }));

    CheckReport piv = single("r2.denesting.pivot_pow2", 2, 0);
    CheckReport piv3 = single("r2.denesting.pivot_3pow2", 2, 0);
    for (unsigned k = 2; k < 62; ++k) {
        const i64 p = i64{1} << k;
        if (p <= N) {
            piv.hi = k;
            piv.tick();
            if (A(p) != 3 * (p / 4)) piv.record(p, 3 * (p / 4), A(p));
        }
        if (3 * (p / 2) <= N) {
            piv3.hi = k;
            piv3.tick();
            if (A(3 * (p / 2)) != p) piv3.record(3 * (p / 2), p, A(3 * (p / 2)));
        }
    }
    b.add(piv);
    b.add(piv3);

    b.add(sweep("r2.denesting.even", 1, N / 2, exec, [&](i64 n, CheckReport& rep) {
        if (!A.has(n + 1)) return;
        rep.tick();
        const i64 want = A(n) + A(n + 1) - 1;
        if (A(2 * n) != want) rep.record(2 * n, want, A(2 * n));
    }));
    b.add(sweep("r2.denesting.odd", 2, (N - 1) / 2, exec, [&](i64 n, CheckReport& rep) {
        rep.tick();
        const i64 want = A(n) + A(n + 1);
        if (A(2 * n + 1) != want) rep.record(2 * n + 1, want, A(2 * n + 1));
    }));

    const std::vector<i64> L = run_lengths(a, 2);
    const i64 V = static_cast<i64>(L.size()) - 1;

    CheckReport init = single("r2.automata.multiplicity_initial", 1, 3);
    const i64 seed[4] = {0, 1, 2, 1};
    for (i64 n = 1; n <= std::min<i64>(3, V); ++n) {
        init.tick();
        if (L[n] != seed[n]) init.record(n, seed[n], L[n]);
    }
    b.add(init);
    b.add(sweep("r2.automata.multiplicity_recurrence", 2, (V - 1) / 2, Exec::serial, [&](i64 n, CheckReport& rep) {
        rep.tick();
        if (L[2 * n] != L[n]) rep.record(2 * n, L[n], L[2 * n]);
        else if (L[2 * n + 1] != L[n + 1]) rep.record(2 * n + 1, L[n + 1], L[2 * n + 1]);
    }));
    b.add(sweep("r2.automata.multiplicity_ceiling_descent", 4, V, Exec::serial, [&](i64 n, CheckReport& rep) {
        rep.tick();
        if (L[n] != L[(n + 1) / 2]) rep.record(n, L[(n + 1) / 2], L[n]);
    }));
    b.add(sweep("r2.combinatorial.second_bit", 4, V, Exec::serial, [&](i64 m, CheckReport& rep) {
        const u64 k = static_cast<u64>(m - 1);
        const unsigned top = 63 - static_cast<unsigned>(__builtin_clzll(k));
        const i64 want = ((k >> (top - 1)) & 1) ? 2 : 1;
        rep.tick();
        if (L[m] != want) rep.record(m, want, L[m]);
    }));
    b.add(sweep("r2.automata.and_rule", 2, (N - 2) / 2, exec, [&](i64 n, CheckReport& rep) {
        rep.tick();
        if (A.d(2 * n) != 1) rep.record(2 * n, 1, A.d(2 * n));
        else if (A.d(2 * n + 1) != A.d(n) * A.d(n + 1)) rep.record(2 * n + 1, A.d(n) * A.d(n + 1), A.d(2 * n + 1));
    }));
    return b;
}

// ---- order 3 ----------------------------------------------------------------

ReportBundle check_r3(const Sequence& a, const CorrectorSet& eps, Exec exec) {
    if (eps.order() != 3) throw std::invalid_argument("check_r3 needs order-3 correctors");
    View A(a);
    const i64 N = A.N;
    ReportBundle b;
    b.title = "order 3";
    auto E = [&](i64 n) -> i64 { return eps.eps(static_cast<u64>(n)); };
    auto covered = [&](i64 lo, i64 hi) { return lo >= 1 && eps.covers(static_cast<u64>(lo)) && eps.covers(static_cast<u64>(hi)); };

    b.add(sweep("r3.denesting.triadic_0", 2, N / 3, exec, [&](i64 n, CheckReport& rep) {
        if (!covered(n - 1, n - 1)) return void(++rep.unchecked);
        rep.tick();
        const i64 want = A(n - 2) + A(n - 1) + A(n) + 1 + E(n - 1);
        if (A(3 * n) != want) rep.record(3 * n, want, A(3 * n));
    }));
    b.add(sweep("r3.denesting.triadic_1", 2, (N - 1) / 3, exec, [&](i64 n, CheckReport& rep) {
        rep.tick();
        const i64 want = A(n - 1) + A(n) + A(n + 1);
        if (A(3 * n + 1) != want) rep.record(3 * n + 1, want, A(3 * n + 1));
    }));
    b.add(sweep("r3.denesting.triadic_2", 2, (N - 2) / 3, exec, [&](i64 n, CheckReport& rep) {
        if (!covered(n, n)) return void(++rep.unchecked);
        rep.tick();
        const i64 want = A(n) + A(n + 1) + A(n + 2) - 1 - E(n);
        if (A(3 * n + 2) != want) rep.record(3 * n + 2, want, A(3 * n + 2));
    }));

    CheckReport blockA = single("r3.denesting.block_anchor", 2, 0);
    CheckReport block = single("r3.denesting.block_formula", 2, 0);
    CheckReport special = single("r3.denesting.special_values", 2, 0);
    for (unsigned k = 2; k < 38; ++k) {
        const i64 p = pow_i(3, k), q = p / 3, q2 = q / 3;
        if (p > N) break;
        blockA.hi = block.hi = k;
        const i64 Ak = (11 * q2 + 1) / 2;
        blockA.tick();
        if (A(p) != Ak) blockA.record(p, Ak, A(p));
        if (A(p - 2) != Ak - 1) blockA.record(p - 2, Ak - 1, A(p - 2));
        if (A(p - 1) != Ak - 1) blockA.record(p - 1, Ak - 1, A(p - 1));
        if (3 * p <= N && A(3 * p) != 3 * A(p) - 1) blockA.record(3 * p, 3 * A(p) - 1, A(3 * p));
        for (i64 j = 0; j <= 2 * q && p + j <= N; ++j) {
            const i64 want = j <= q - 1 ? Ak + j / 3 : Ak + q2 + (j - q) / 2;
            block.tick();
            if (A(p + j) != want) block.record(p + j, want, A(p + j));
        }
        if (5 * q <= N) {
            special.hi = k;
            special.tick();
            if (A(5 * q) != 8 * q2) special.record(5 * q, 8 * q2, A(5 * q));
            // The block formula at j = 2*3^(k-1) - 1 gives 8*3^(k-2), not 8*3^(k-2) - 1.
            if (A(5 * q - 1) != 8 * q2) special.record(5 * q - 1, 8 * q2, A(5 * q - 1));
        }
    }
    b.add(blockA);
    b.add(block);
    b.add(special);

    const std::vector<i64> L = run_lengths(a, 3);
    const i64 V = static_cast<i64>(L.size()) - 1;

    b.add(sweep("r3.combinatorial.run_length_invariant", 3, V, Exec::serial, [&](i64 n, CheckReport& rep) {
        if (!covered(n - 1, n - 1)) return void(++rep.unchecked);
        rep.tick();
        const i64 e = E(n - 1);
        if (L[n] > 2 + e || (L[n] == 3) != (e == 1)) rep.record(n, 2 + e, L[n]);
    }));

    b.add(sweep("r3.combinatorial.palindromic_block", 3, std::min(V, (N - 1) / 3), Exec::serial,
                [&](i64 n, CheckReport& rep) {
                    rep.tick();
                    const i64 x = A.d(3 * n - 2), y = A.d(3 * n - 1), z = A.d(3 * n);
                    static const i64 table[4][3] = {{0, 0, 0}, {0, 1, 0}, {1, 0, 1}, {1, 1, 1}};
                    const i64 Ln = L[n];
                    if (x != z || x + y + z != Ln || Ln < 1 || Ln > 3) {
                        rep.record(3 * n - 2, Ln, x + y + z);
                    } else if (x != table[Ln][0] || y != table[Ln][1]) {
                        rep.record(3 * n - 2, table[Ln][0] * 4 + table[Ln][1] * 2 + table[Ln][2], x * 4 + y * 2 + z);
                    }
                }));

    const i64 lp_hi = (V - 1) / 3;
    b.add(sweep("r3.combinatorial.run_propagation", 4, lp_hi, Exec::serial, [&](i64 n, CheckReport& rep) {
        if (!covered(n - 2, n)) return void(++rep.unchecked);
        rep.tick();
        const i64 w1 = L[n - 1] + E(n - 1) - E(n - 2), w2 = L[n], w3 = L[n + 1] + E(n - 1) - E(n);
        if (L[3 * n - 1] != w1) rep.record(3 * n - 1, w1, L[3 * n - 1]);
        else if (L[3 * n] != w2) rep.record(3 * n, w2, L[3 * n]);
        else if (L[3 * n + 1] != w3) rep.record(3 * n + 1, w3, L[3 * n + 1]);
    }));
    b.add(sweep("r3.combinatorial.laplacian", 4, lp_hi, Exec::serial, [&](i64 n, CheckReport& rep) {
        if (!covered(n - 2, n)) return void(++rep.unchecked);
        rep.tick();
        const i64 lhs = L[3 * n - 1] + L[3 * n] + L[3 * n + 1];
        const i64 rhs = L[n - 1] + L[n] + L[n + 1] - (E(n - 2) - 2 * E(n - 1) + E(n));
        if (lhs != rhs) rep.record(n, rhs, lhs);
    }));
    return b;
}

ReportBundle r3_interval_structure(unsigned k_max) {
    ReportBundle b;
    b.title = "order 3 intervals";
    CheckReport self = single("r3.automata.interval_self_similarity", 0, k_max);
    CheckReport card = single("r3.automata.interval_cardinality", 0, k_max);
    for (unsigned k = 0; k <= k_max; ++k) {
        const auto [lo, hi] = r3_interval(k);
        card.tick();
        const i64 size = static_cast<i64>(hi - lo + 1);
        if (size != pow_i(3, k)) card.record(k, pow_i(3, k), size);
        if (k == k_max) break;
        std::set<u64> built;
        for (u64 x = lo; x <= hi; ++x)
            for (u64 c = 1; c <= 3; ++c) built.insert(3 * x + c);
        const auto [lo2, hi2] = r3_interval(k + 1);
        std::set<u64> next;
        for (u64 x = lo2; x <= hi2; ++x) next.insert(x);
        self.tick();
        if (built != next) self.record(k + 1, static_cast<i64>(next.size()), static_cast<i64>(built.size()));
    }
    b.add(self);
    b.add(card);
    return b;
}

// ---- order 4 ----------------------------------------------------------------

ReportBundle check_r4(const Sequence& a, const CorrectorSet& eps, Exec exec) {
    if (eps.order() != 4) throw std::invalid_argument("check_r4 needs order-4 correctors");
    View A(a);
    const i64 N = A.N;
    ReportBundle b;
    b.title = "order 4";
    auto E = [&](unsigned i, i64 n) -> i64 { return eps.eps_i(i, static_cast<u64>(n)); };
    auto ok = [&](i64 n) { return eps.covers(static_cast<u64>(n)); };

    const char* names[4] = {"r4.denesting.quaternary_0", "r4.denesting.quaternary_1", "r4.denesting.quaternary_2",
                            "r4.denesting.quaternary_3"};
    for (unsigned i = 0; i < 4; ++i) {
        b.add(sweep(names[i], 5, (N - static_cast<i64>(i)) / 4, exec, [&, i](i64 n, CheckReport& rep) {
            if (!ok(n) || (i == 3 && !A.has(n + 2))) return void(++rep.unchecked);
            rep.tick();
            i64 want = 0;
            switch (i) {
                case 0: want = A(n - 3) + A(n - 2) + A(n - 1) + A(n) + 1 + E(0, n); break;
                case 1: want = A(n - 2) + A(n - 1) + A(n) + A(n + 1) + E(1, n); break;
                case 2: want = A(n - 2) + A(n - 1) + A(n) + A(n + 1) + E(2, n); break;
                case 3: want = A(n - 1) + A(n) + A(n + 1) + A(n + 2) - 1 + E(3, n); break;
            }
            const i64 got = A(4 * n + static_cast<i64>(i));
            if (got != want) rep.record(4 * n + static_cast<i64>(i), want, got);
        }));
    }
    b.add(sweep("r4.denesting.step_difference", 5, (N - 2) / 4, exec, [&](i64 n, CheckReport& rep) {
        if (!ok(n)) return void(++rep.unchecked);
        rep.tick();
        const i64 want = E(2, n) - E(1, n), got = A(4 * n + 2) - A(4 * n + 1);
        if (got != want) rep.record(4 * n + 1, want, got);
    }));

    CheckReport init = single("r4.automata.initial_table", 5, 23);
    for (i64 n = 5; n <= 23 && 4 * n + 3 <= N; ++n) {
        init.tick();
        for (unsigned i = 0; i < 4; ++i) {
            const int want = r4_initial(i, static_cast<u64>(n)), got = r4_definition(a, i, static_cast<u64>(n));
            if (got != want) {
                init.record(n * 4 + static_cast<i64>(i), want, got);
                break;
            }
        }
    }
    b.add(init);
    b.append(r4_recurrence_sweep(a, definition_limit(4, a.size()) / 4 - 1, exec));
    return b;
}

ReportBundle r4_recurrence_sweep(const Sequence& a, std::uint64_t m_hi, Exec exec) {
    ReportBundle b;
    b.title = "order 4 recurrences";
    const u64 lim = definition_limit(4, a.size());
    m_hi = std::min<u64>(m_hi, lim >= 4 ? (lim - 3) / 4 : 0);
    for (unsigned i = 0; i < 4; ++i) {
        for (unsigned d = 0; d < 4; ++d) {
            const std::string name = "r4.automata.recurrence_e" + std::to_string(i) + "_" + std::to_string(d);
            b.add(sweep(name, 6, static_cast<i64>(m_hi), exec, [&, i, d](i64 m, CheckReport& rep) {
                int w[4][3];
                for (unsigned j = 0; j < 4; ++j)
                    for (int o = 0; o < 3; ++o) w[j][o] = r4_definition(a, j, static_cast<u64>(m - 1 + o));
                rep.tick();
                const i64 n = 4 * m + static_cast<i64>(d);
                const int want = r4_rule(i, d, w), got = r4_definition(a, i, static_cast<u64>(n));
                if (got != want) rep.record(n, want, got);
            }));
        }
    }
    return b;
}

// ---- order 5 ----------------------------------------------------------------

ReportBundle check_r5(const Sequence& a, const CorrectorSet& c, Exec exec) {
    if (c.order() != 5) throw std::invalid_argument("check_r5 needs order-5 correctors");
    View A(a);
    const i64 N = A.N;
    ReportBundle b;
    b.title = "order 5";
    auto T = [&](i64 m) { return static_cast<i64>(t5(a, m)); };
    auto ok = [&](i64 n) { return c.covers(static_cast<u64>(n)); };

    for (unsigned i = 0; i < 5; ++i) {
        const std::string name = "r5.denesting.quinary_" + std::to_string(i);
        b.add(sweep(name, 3, (N - static_cast<i64>(i)) / 5, exec, [&, i](i64 n, CheckReport& rep) {
            if (!ok(n)) return void(++rep.unchecked);
            const u64 q = static_cast<u64>(n);
            const i64 t = T(n + static_cast<i64>(i));
            i64 want = 0;
            switch (i) {
                case 0: want = t + 2 + c.eps(q); break;
                case 1: want = t + 1 - c.eps(q); break;
                case 2: want = t - 1 - c.eta(q); break;
                case 3: want = t - 4 + c.theta(q); break;
                case 4: want = t - 2 + c.eps4(q); break;
            }
            rep.tick();
            const i64 got = A(5 * n + static_cast<i64>(i));
            if (got != want) rep.record(5 * n + static_cast<i64>(i), want, got);
        }));
    }

    const i64 lim = static_cast<i64>(definition_limit(5, a.size()));
    auto U = [&](i64 n) {
        const R5Values v = r5_definition(a, static_cast<u64>(n));
        return Pair{v.eps, v.eta};
    };

    b.add(sweep("r5.automata.value_ranges", 3, lim, exec, [&](i64 n, CheckReport& rep) {
        rep.tick();
        const R5Values v = r5_definition(a, static_cast<u64>(n));
        if (v.eps < 0 || v.eps > 1) rep.record(n, 0, v.eps);
        else if (v.eta < 0 || v.eta > 1) rep.record(n, 0, v.eta);
        else if (v.theta < 0 || v.theta > 1) rep.record(n, 0, v.theta);
        else if (v.eps4 < -4 || v.eps4 > -2) rep.record(n, -3, v.eps4);
    }));
    b.add(sweep("r5.automata.disjointness", 3, lim, exec, [&](i64 n, CheckReport& rep) {
        rep.tick();
        const Pair u = U(n);
        if (u.e * u.h != 0) rep.record(n, 0, u.e * u.h);
    }));
    b.add(sweep("r5.automata.five_transitions", 3, lim, exec, [&](i64 m, CheckReport& rep) {
        rep.tick();
        const Pair p = U(m - 1), q = U(m);
        if (!r5_known_transition(p, q)) rep.record(m, 0, p.code() * 3 + q.code());
    }));
    auto table_check = [&](const char* name, bool theta) {
        return sweep(name, 3, lim, exec, [&, theta](i64 n, CheckReport& rep) {
            const i64 m = n / 5;
            if (n >= 15 && m + 1 > lim) return void(++rep.unchecked);
            rep.tick();
            const R5Values def = r5_definition(a, static_cast<u64>(n));
            try {
                const R5Values tab = n >= 15 ? r5_complete(static_cast<u64>(n), U(m - 1), U(m), U(m + 1))
                                             : r5_complete(static_cast<u64>(n), {}, {}, {});
                if (theta && tab.theta != def.theta) rep.record(n, tab.theta, def.theta);
                if (!theta && tab.eps4 != def.eps4) rep.record(n, tab.eps4, def.eps4);
            } catch (const std::runtime_error&) {
                rep.record(n, -99, theta ? def.theta : def.eps4);
            }
        });
    };
    b.add(table_check("r5.automata.theta_table", true));
    b.add(table_check("r5.automata.eps4_table", false));
    b.append(r5_recurrence_sweep(a, static_cast<u64>(lim) / 5, exec));
    return b;
}

ReportBundle r5_recurrence_sweep(const Sequence& a, std::uint64_t m_hi, Exec exec) {
    ReportBundle b;
    b.title = "order 5 recurrences";
    const u64 lim = definition_limit(5, a.size());
    m_hi = std::min<u64>(m_hi, lim >= 4 ? (lim - 4) / 5 : 0);
    auto U = [&](i64 n) {
        const R5Values v = r5_definition(a, static_cast<u64>(n));
        return Pair{v.eps, v.eta};
    };
    for (int which = 0; which < 2; ++which) {
        for (unsigned d = 0; d < 5; ++d) {
            const std::string name =
                std::string("r5.automata.recurrence_") + (which == 0 ? "eps_" : "eta_") + std::to_string(d);
            b.add(sweep(name, 4, static_cast<i64>(m_hi), exec, [&, which, d](i64 m, CheckReport& rep) {
                rep.tick();
                const i64 n = 5 * m + static_cast<i64>(d);
                const Pair want = r5_rule(d, U(m - 1), U(m));
                const Pair got = U(n);
                const int w = which == 0 ? want.e : want.h, g = which == 0 ? got.e : got.h;
                if (w != g) rep.record(n, w, g);
            }));
        }
    }
    return b;
}

// ---- agreement --------------------------------------------------------------

ReportBundle corrector_agreement(unsigned order, std::uint64_t hi, const Sequence* a, DfaoSource src, Exec exec) {
    ReportBundle b;
    b.title = "corrector agreement, order " + std::to_string(order);
    const std::string pfx = "r" + std::to_string(order) + ".automata.";
    const std::string tag = src == DfaoSource::table ? "dfao_table" : "dfao_kernel";
    const CorrectorSet ref = make_correctors(order, Method::recurrence, hi, nullptr, src, Exec::serial);
    const i64 lo = static_cast<i64>(ref.floor()), top = static_cast<i64>(hi);
    const i64 def_top = a ? std::min<i64>(top, static_cast<i64>(definition_limit(order, a->size()))) : lo - 1;

    if (order == 3) {
        const Dfao m = build_dfao("r3-eps", src);
        b.add(sweep(pfx + "interval_vs_recurrence", lo, top, exec, [&](i64 n, CheckReport& rep) {
            rep.tick();
            const int x = eps3_interval(static_cast<u64>(n)), y = ref.eps(static_cast<u64>(n));
            if (x != y) rep.record(n, y, x);
        }));
        b.add(sweep(pfx + tag + "_vs_recurrence", lo, top, exec, [&](i64 n, CheckReport& rep) {
            rep.tick();
            const int x = eval_dfao(m, static_cast<u64>(n)), y = ref.eps(static_cast<u64>(n));
            if (x != y) rep.record(n, y, x);
        }));
        if (a)
            b.add(sweep(pfx + "definition_vs_recurrence", lo, def_top, exec, [&](i64 n, CheckReport& rep) {
                rep.tick();
                const int x = eps3_definition(*a, static_cast<u64>(n)), y = ref.eps(static_cast<u64>(n));
                if (x != y) rep.record(n, y, x);
            }));
    } else if (order == 4) {
        for (unsigned i = 0; i < 4; ++i) {
            const Dfao m = build_dfao("r4-eps" + std::to_string(i), src);
            b.add(sweep(pfx + tag + "_vs_recurrence_e" + std::to_string(i), lo, top, exec,
                        [&, i](i64 n, CheckReport& rep) {
                            rep.tick();
                            const int x = eval_dfao(m, static_cast<u64>(n)), y = ref.eps_i(i, static_cast<u64>(n));
                            if (x != y) rep.record(n, y, x);
                        }));
            if (a)
                b.add(sweep(pfx + "definition_vs_recurrence_e" + std::to_string(i), lo, def_top, exec,
                            [&, i](i64 n, CheckReport& rep) {
                                rep.tick();
                                const int x = r4_definition(*a, i, static_cast<u64>(n));
                                const int y = ref.eps_i(i, static_cast<u64>(n));
                                if (x != y) rep.record(n, y, x);
                            }));
        }
    } else if (order == 5) {
        const Dfao m = build_dfao("r5-U", src);
        auto U = [&](i64 q) { return q <= 0 ? Pair{} : Pair::from_code(eval_dfao(m, static_cast<u64>(q))); };
        b.add(sweep(pfx + tag + "_vs_recurrence_U", lo, top, exec, [&](i64 n, CheckReport& rep) {
            rep.tick();
            const Pair x = U(n);
            const Pair y{ref.eps(static_cast<u64>(n)), ref.eta(static_cast<u64>(n))};
            if (!(x == y)) rep.record(n, y.code(), x.code());
        }));
        b.add(sweep(pfx + tag + "_vs_recurrence_theta_eps4", lo, top, exec, [&](i64 n, CheckReport& rep) {
            rep.tick();
            const u64 q = static_cast<u64>(n);
            const i64 mm = n / 5;
            try {
                const R5Values v = n >= 15 ? r5_complete(q, U(mm - 1), U(mm), U(mm + 1)) : r5_complete(q, {}, {}, {});
                if (v.theta != ref.theta(q)) rep.record(n, ref.theta(q), v.theta);
                else if (v.eps4 != ref.eps4(q)) rep.record(n, ref.eps4(q), v.eps4);
            } catch (const std::runtime_error&) {
                rep.record(n, ref.theta(q), -99);
            }
        }));
        if (a)
            b.add(sweep(pfx + "definition_vs_recurrence", lo, def_top, exec, [&](i64 n, CheckReport& rep) {
                rep.tick();
                const u64 q = static_cast<u64>(n);
                const R5Values x = r5_definition(*a, q), y = ref.r5(q);
                if (!(x == y)) {
                    const i64 xc = x.eps + 2 * x.eta + 4 * x.theta + 8 * (x.eps4 + 4);
                    const i64 yc = y.eps + 2 * y.eta + 4 * y.theta + 8 * (y.eps4 + 4);
                    rep.record(n, yc, xc);
                }
            }));
        b.add(sweep(pfx + "recurrence_disjointness", lo, top, exec, [&](i64 n, CheckReport& rep) {
            rep.tick();
            const u64 q = static_cast<u64>(n);
            if (ref.eps(q) * ref.eta(q) != 0) rep.record(n, 0, 1);
        }));
    } else {
        throw std::invalid_argument("correctors exist for orders 3, 4, 5 only");
    }
    return b;
}

// ---- gap 2 ------------------------------------------------------------------

namespace {

std::set<i64> gap2_block(unsigned k) {
    std::set<i64> s;
    const i64 p = i64{1} << k;
    for (i64 x = 5 * p + 2; x <= 6 * p - 2; ++x)
        if (x % 4 == 2) s.insert(x);
    return s;
}

}  // namespace

ReportBundle check_gap2(const Sequence& a) {
    View A(a);
    const i64 N = A.N;
    ReportBundle b;
    b.title = "gap 2";

    struct Family {
        const char* name;
        i64 mult;
        unsigned k0;
        i64 num;
        int shift;  // value = num * 2^(k + shift)
    };
    const Family fams[] = {{"gap2.denesting.family_7x2k", 7, 1, 5, 0},
                           {"gap2.denesting.family_5x2k", 5, 2, 7, -1},
                           {"gap2.denesting.family_3x2k", 3, 3, 17, -3}};
    for (const auto& f : fams) {
        CheckReport c = single(f.name, f.k0, f.k0 - 1);
        for (unsigned k = f.k0; k < 60; ++k) {
            const i64 n = f.mult << k;
            if (n > N) break;
            c.hi = k;
            c.tick();
            const i64 want = f.num << (static_cast<int>(k) + f.shift);
            if (A(n) != want) c.record(n, want, A(n));
        }
        b.add(c);
    }

    CheckReport rec = single("gap2.combinatorial.correction_set_recursion", 3, 2);
    CheckReport card = single("gap2.combinatorial.correction_set_cardinality", 2, 1);
    for (unsigned k = 2; k < 60 && 6 * (i64{1} << k) - 2 <= N; ++k) {
        const auto Ik = gap2_block(k);
        card.hi = k;
        card.tick();
        const i64 want = i64{1} << (k - 2);
        if (static_cast<i64>(Ik.size()) != want) card.record(k, want, static_cast<i64>(Ik.size()));
        if (k < 3) continue;
        std::set<i64> rhs{6 * (i64{1} << k) - 2};
        for (i64 x : gap2_block(k - 1)) rhs.insert(2 * x - 2);
        rec.hi = k;
        rec.tick();
        if (rhs != Ik) rec.record(k, static_cast<i64>(Ik.size()), static_cast<i64>(rhs.size()));
    }
    b.add(rec);
    b.add(card);

    b.add(sweep("gap2.combinatorial.unit_increments", 1, N - 1, Exec::serial, [&](i64 n, CheckReport& rep) {
        rep.tick();
        if (A.d(n) != 0 && A.d(n) != 1) rep.record(n, 1, A.d(n));
    }));
    return b;
}

CheckReport gap2_printed_prefix(const Sequence& a) {
    static const i64 printed[] = {1, 2, 2, 3, 3, 4, 5, 6, 6, 7, 7, 8, 8};
    CheckReport c = single("gap2.definition.printed_prefix", 1, 13);
    for (i64 n = 1; n <= 13 && n <= static_cast<i64>(a.size()); ++n) {
        c.tick();
        if (static_cast<i64>(a(n)) != printed[n - 1]) c.record(n, printed[n - 1], static_cast<i64>(a(n)));
    }
    return c;
}

// ---- suites -----------------------------------------------------------------

const char* suite_name(Suite s) {
    switch (s) {
        case Suite::definition: return "definition";
        case Suite::denesting: return "denesting";
        case Suite::automata: return "automata";
        case Suite::combinatorial: return "combinatorial";
        case Suite::all: return "all";
    }
    return "?";
}

Suite parse_suite(const std::string& s) {
    for (Suite x : {Suite::definition, Suite::denesting, Suite::automata, Suite::combinatorial, Suite::all})
        if (s == suite_name(x)) return x;
    throw std::invalid_argument("unknown suite: " + s);
}

bool suite_applies(Suite s, unsigned r) {
    switch (s) {
        case Suite::definition:
        case Suite::all: return r >= 2;
        case Suite::denesting:
        case Suite::automata: return r >= 2 && r <= 5;
        case Suite::combinatorial: return r == 2 || r == 3;
    }
    return false;
}

ReportBundle run_suite(const Sequence& a, unsigned r, Suite suite, const SuiteOptions& opt) {
    if (!suite_applies(suite, r))
        throw InapplicableSuite(std::string("suite '") + suite_name(suite) + "' does not apply to order " +
                                std::to_string(r));
    ReportBundle out;
    out.title = "order " + std::to_string(r) + ", suite " + suite_name(suite);

    auto guarded = [&](const std::string& label, auto&& fn) {
        try {
            fn();
        } catch (const std::exception& e) {
            CheckReport c = single(label + ".exception", 0, 0);
            c.tick();
            c.record(0, 0, 1);
            c.note = e.what();
            out.add(c);
        }
    };
    auto keep = [&](const ReportBundle& b) {
        for (const auto& c : b.checks) {
            const auto dot = c.name.find('.');
            const auto dot2 = c.name.find('.', dot + 1);
            const std::string tag = c.name.substr(dot + 1, dot2 - dot - 1);
            if (suite == Suite::all || tag == suite_name(suite)) out.add(c);
        }
    };

    if (suite == Suite::definition || suite == Suite::all) {
        guarded("definition", [&] {
            out.append(verify_defining_property(a, r, opt.exec).bundle());
            out.append(structural_invariants(a, r));
            out.add(nested_anchor_check(a, r, opt.exec));
            if (opt.window_check && r <= 10) {
                const WindowReport w = window_determinism_check(a, r, opt.exec);
                CheckReport c = single("structure.window_determinism", w.n0, static_cast<i64>(a.size()));
                c.tick(w.total_windows());
                for (unsigned i = 0; i < r; ++i)
                    if (w.conflicts[i]) c.record(w.first_conflict[i], 0, static_cast<i64>(w.conflicts[i]));
                out.add(c);
            }
        });
        if (suite == Suite::definition || r > 5) return out;
    }

    const u64 hi = a.size() / static_cast<u64>(r) + 2;
    auto correctors = [&]() {
        u64 top = hi;
        if (opt.corrector_method == Method::definition) top = definition_limit(r, a.size());
        return make_correctors(r, opt.corrector_method, top, &a, opt.dfao_source, opt.exec);
    };
    guarded("r" + std::to_string(r), [&] {
        switch (r) {
            case 2: keep(check_r2(a, opt.exec)); break;
            case 3: {
                const CorrectorSet eps = correctors();
                keep(check_r3(a, eps, opt.exec));
                if (suite == Suite::automata || suite == Suite::all) {
                    keep(r3_interval_structure(8));
                    keep(corrector_agreement(3, std::min<u64>(hi, 100000), &a, opt.dfao_source, opt.exec));
                }
                break;
            }
            case 4: {
                const CorrectorSet eps = correctors();
                keep(check_r4(a, eps, opt.exec));
                if (suite == Suite::automata || suite == Suite::all)
                    keep(corrector_agreement(4, std::min<u64>(hi, 100000), &a, opt.dfao_source, opt.exec));
                break;
            }
            case 5: {
                const CorrectorSet c = correctors();
                keep(check_r5(a, c, opt.exec));
                if (suite == Suite::automata || suite == Suite::all)
                    keep(corrector_agreement(5, std::min<u64>(hi, 100000), &a, opt.dfao_source, opt.exec));
                break;
            }
        }
    });
    return out;
}

}  // namespace agolomb
