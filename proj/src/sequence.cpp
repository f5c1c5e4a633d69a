#include "agolomb/sequence.hpp"

#include <cassert>
#include <limits>
#include <sstream>

namespace agolomb {

std::string FamilyTag::describe() const {
    switch (family) {
        case Family::almost_golomb: return "almost-golomb r=" + std::to_string(param);
        case Family::golomb: return "golomb";
        case Family::gap_variant: return "gap-variant s=" + std::to_string(param);
        case Family::mallows_r2: return "mallows-r2";
    }
    return "unknown";
}

Sequence::Sequence(FamilyTag tag, std::vector<u64> terms) : tag_(tag), terms_(std::move(terms)) {}

Sequence Sequence::with_term(std::size_t k, u64 value) const {
    if (k == 0 || k > terms_.size()) throw std::out_of_range("with_term index");
    Sequence copy = *this;
    copy.terms_[k - 1] = value;
    return copy;
}

Sequence generate_almost_golomb(unsigned r, std::size_t N) {
    if (r < 2) throw std::invalid_argument("order r must be >= 2");
    if (N == 0) throw std::invalid_argument("term count N must be >= 1");

    // t[k] = a(k); t[0] stays 0 and absorbs every k <= 0 lookup below.
    std::vector<u64> t(N + 1, 0);
    auto A = [&](i64 k) -> u64 { return k <= 0 ? 0 : t[static_cast<std::size_t>(k)]; };

    t[1] = 1;
    const std::size_t s3 = (r == 2) ? 4 : 5;
    for (std::size_t n = 2; n < s3 && n <= N; ++n) t[n] = 2;

    std::size_t S = s3;
    u64 m = 3;
    while (S <= N) {
        t[S] = m;  // a(m+1) may be this very position when m+1 == S
        const u64 L = A(static_cast<i64>(m) + 1) - A(static_cast<i64>(m) + 1 - static_cast<i64>(r));
        if (L == 0 || L > r) throw std::logic_error("run length out of range at value " + std::to_string(m));
        const std::size_t end = std::min<std::size_t>(S + L, N + 1);
        for (std::size_t p = S + 1; p < end; ++p) t[p] = m;
        S += L;
        ++m;
    }
    t.erase(t.begin());
    return Sequence({Family::almost_golomb, r}, std::move(t));
}

GolombPair generate_golomb(std::size_t K) {
    if (K == 0) throw std::invalid_argument("K must be >= 1");
    GolombPair g;
    g.G.reserve(K);
    g.G.push_back(1);
    if (K >= 2) g.G.push_back(2);
    // value v is repeated G(v) times; G(2) = 2 seeds the self-description
    for (u64 v = 2; g.G.size() < K; ++v) {
        u64 reps = g.G[v - 1];
        std::size_t already = (v == 2) ? 1 : 0;
        for (u64 i = already; i < reps && g.G.size() < K; ++i) g.G.push_back(v);
    }
    g.S.resize(K);
    u64 acc = 0;
    for (std::size_t k = 0; k < K; ++k) g.S[k] = (acc += g.G[k]);
    // G(S(k)) = k wherever S(k) is inside the computed range
    for (std::size_t k = 1; k <= K && g.S[k - 1] <= K; ++k)
        if (g.G[g.S[k - 1] - 1] != k) throw std::logic_error("golomb partial sum check failed");
    return g;
}

Sequence golomb_sequence(std::size_t K) {
    return Sequence({Family::golomb, 0}, generate_golomb(K).G);
}

Sequence generate_r2_mallows(std::size_t N) {
    if (N < 4) throw std::invalid_argument("mallows recurrence needs N >= 4");
    std::vector<u64> t(N + 1, 0);
    t[1] = 1;
    t[2] = 2;
    t[3] = 2;
    t[4] = 3;
    for (std::size_t n = 4; n < N; ++n) {
        const u64 m = t[n];
        if (m + 1 > n || m < 1) throw std::logic_error("mallows inner index out of range");
        const i64 idx = static_cast<i64>(n) + 1 - static_cast<i64>(t[m + 1]) + static_cast<i64>(t[m - 1]);
        if (idx < 1 || idx > static_cast<i64>(n))
            throw std::logic_error("mallows outer index " + std::to_string(idx) + " out of range at n=" +
                                   std::to_string(n));
        t[n + 1] = 1 + t[static_cast<std::size_t>(idx)];
    }
    t.erase(t.begin());
    return Sequence({Family::mallows_r2, 2}, std::move(t));
}

Sequence generate_gap_variant(unsigned s, std::size_t N) {
    if (s < 1) throw std::invalid_argument("gap s must be >= 1");
    if (N == 0) throw std::invalid_argument("term count N must be >= 1");

    std::vector<u64> t(N + 1, 0);
    auto A = [&](i64 k) -> u64 { return k <= 0 ? 0 : t[static_cast<std::size_t>(k)]; };
    // forced[p] = n records a pending promise a(p) = n for a position p not yet placed
    std::vector<u64> forced(2 * N + 4, 0);
    u64 max_forced = 0;

    t[1] = 1;
    for (std::size_t n = 2; n <= N; ++n) {
        const u64 lo = t[n - 1];
        const u64 back = A(static_cast<i64>(n) - static_cast<i64>(s));
        const u64 cap = lo + N;
        const bool pinned = forced[n] != 0;
        bool placed = false;
        for (u64 v = pinned ? forced[n] : lo; v <= cap; ++v) {
            if (v < lo) break;
            const u64 p = v + back;
            bool ok = false;
            if (p < n) {
                ok = t[p] == n;
            } else if (p == n) {
                ok = v == n;
            } else if (p < forced.size() && forced[p] != 0) {
                ok = forced[p] == n;
            } else if (p > max_forced && v <= n) {
                if (p >= forced.size()) forced.resize(2 * p + 2, 0);
                forced[p] = n;
                max_forced = p;
                ok = true;
            }
            if (ok) {
                t[n] = v;
                placed = true;
                break;
            }
            if (pinned) break;
        }
        if (!placed) {
            std::ostringstream os;
            os << "gap-" << s << " greedy found no feasible value at n=" << n << " within cap " << cap;
            throw std::runtime_error(os.str());
        }
    }
    t.erase(t.begin());
    return Sequence({Family::gap_variant, s}, std::move(t));
}

u64 window_sum(const Sequence& a, i64 n, unsigned r) {
    u64 s = 0;
    for (unsigned j = 0; j < r; ++j) s += a(n - static_cast<i64>(j));
    return s;
}

static bool claims_unit_increments(const FamilyTag& tag) {
    return tag.family != Family::gap_variant || tag.param <= 2;
}

DiffSeq first_differences(const Sequence& a) {
    if (a.size() < 2) throw std::invalid_argument("first_differences needs N >= 2");
    DiffSeq out;
    out.d.resize(a.size());
    out.d[0] = 1;
    const bool unit = claims_unit_increments(a.tag());
    for (std::size_t n = 1; n < a.size(); ++n) {
        const u64 x = a.at(n), y = a.at(n + 1);
        if (y < x || (unit && y - x > 1) || y - x > std::numeric_limits<std::uint8_t>::max())
            throw std::domain_error("difference out of range at n=" + std::to_string(n));
        out.d[n] = static_cast<std::uint8_t>(y - x);
    }
    return out;
}

RunTable run_table(const Sequence& a, unsigned r) {
    RunTable rt;
    rt.order = r;
    const std::size_t N = a.size();
    std::size_t p = 1;
    while (p <= N) {
        const u64 v = a.at(p);
        std::size_t q = p;
        while (q < N && a.at(q + 1) == v) ++q;
        if (q == N) break;  // trailing run may continue past N
        if (v != rt.entries.size() + 1) {
            // a skipped or repeated value means runs are not indexed by value
            rt.mismatched_values.push_back(v);
            break;
        }
        rt.entries.push_back({v, p, q - p + 1});
        p = q + 1;
    }
    if (a.tag().family == Family::almost_golomb || a.tag().family == Family::mallows_r2) {
        for (const auto& e : rt.entries) {
            const u64 m = e.value;
            if (m < 3) continue;
            const i64 mi = static_cast<i64>(m);
            if (mi + 1 > static_cast<i64>(N)) break;
            const u64 L = a(mi + 1) - a(mi + 1 - static_cast<i64>(r));
            const u64 S = window_sum(a, mi, r);
            if (L != e.length || S != e.anchor) rt.mismatched_values.push_back(m);
        }
    }
    return rt;
}

}  // namespace agolomb
