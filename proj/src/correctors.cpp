#include "agolomb/correctors.hpp"

#include <functional>
#include <map>
#include <memory>
#include <stdexcept>

namespace agolomb {

namespace {

constexpr u64 kDenseCap = u64{1} << 24;

int bit(int x, const char* where) {
    if (x != 0 && x != 1) throw std::logic_error(std::string("non-binary corrector value in ") + where);
    return x;
}

int xor_bits(int x, int y) { return x + y - 2 * x * y; }
int xnor_bits(int x, int y) { return 1 - x - y + 2 * x * y; }

// Memo lookup shared by the three recurrence evaluators: dense for small n, sparse beyond.
template <class Compute>
std::int8_t memo(std::vector<std::int8_t>& dense, std::unordered_map<u64, std::int8_t>& sparse, u64 n,
                 Compute&& compute) {
    if (n < kDenseCap) {
        if (n >= dense.size()) dense.resize(std::max<std::size_t>(n + 1, dense.size() * 2), -1);
        if (dense[n] >= 0) return dense[n];
        const std::int8_t v = compute();
        dense[n] = v;
        return v;
    }
    if (auto it = sparse.find(n); it != sparse.end()) return it->second;
    const std::int8_t v = compute();
    sparse.emplace(n, v);
    return v;
}

const int k_r4_init[4][19] = {
    {0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 1, 0, 1, 1, 0, 1},
    {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 1, 0},
    {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 1, 0, 1, 1, 0, 1, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 1, 0, 1},
};

// U(n) for 0 <= n <= 19
const int k_r5_seed_e[20] = {0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 1, 0, 1};
const int k_r5_seed_h[20] = {0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 1, 0, 1, 0};

// n = 3..14
const int k_r5_theta_init[12] = {1, 1, 1, 1, 1, 1, 1, 1, 0, 1, 0, 1};
const int k_r5_eps4_init[12] = {-3, -2, -2, -2, -2, -2, -2, -3, -3, -4, -3, -4};

const Pair P00{0, 0}, P10{1, 0}, P01{0, 1};

i64 s64(u64 x) { return static_cast<i64>(x); }

}  // namespace

const char* method_name(Method m) {
    switch (m) {
        case Method::interval: return "interval";
        case Method::recurrence: return "recurrence";
        case Method::dfao: return "dfao";
        case Method::definition: return "definition";
    }
    return "?";
}

// ---- order 3 ---------------------------------------------------------------

std::pair<u64, u64> r3_interval(unsigned k) {
    unsigned __int128 p = 1;
    for (unsigned i = 0; i < k; ++i) p *= 3;
    return {static_cast<u64>((11 * p - 1) / 2), static_cast<u64>((13 * p - 3) / 2)};
}

int eps3_interval(u64 n) {
    if (n == 0) throw std::invalid_argument("eps3: n must be >= 1");
    // largest k with lower(k) <= n, then a single membership test
    unsigned k = 0;
    if (n < r3_interval(0).first) return 0;
    while (k < 38 && r3_interval(k + 1).first <= n) ++k;
    return n <= r3_interval(k).second ? 1 : 0;
}

int eps3_rule(unsigned d, int prev, int cur) { return d == 0 ? prev : cur; }

int Eps3Recurrence::operator()(u64 n) {
    if (n == 0) throw std::invalid_argument("eps3: n must be >= 1");
    if (n < 5) return 0;
    if (n == 5) return 1;
    return memo(dense_, sparse_, n, [&]() -> std::int8_t {
        const u64 m = n / 3;
        const unsigned d = static_cast<unsigned>(n % 3);
        return static_cast<std::int8_t>(bit(eps3_rule(d, (*this)(m - 1), (*this)(m)), "eps3"));
    });
}

int eps3_definition(const Sequence& a, u64 n) {
    const i64 k = s64(n);
    return static_cast<int>(s64(a(3 * k + 3)) - s64(a(k - 1)) - s64(a(k)) - s64(a(k + 1)) - 1);
}

int eps3(u64 n, Method method) {
    switch (method) {
        case Method::interval: return eps3_interval(n);
        case Method::recurrence: {
            Eps3Recurrence rec;
            return rec(n);
        }
        case Method::dfao: {
            static const Dfao m = build_dfao("r3-eps");
            return eval_dfao(m, n);
        }
        case Method::definition: break;
    }
    throw std::invalid_argument("eps3: definition method needs a sequence; use eps3_definition");
}

// ---- order 4 ---------------------------------------------------------------

int r4_rule(unsigned i, unsigned d, const int (&w)[4][3]) {
    auto e = [&](unsigned j, int off) { return w[j][off + 1]; };
    switch (i * 4 + d) {
        case 0: return (1 - e(0, 0)) * e(0, 1) + e(0, 0) * e(0, -1);
        case 1: return (1 - e(0, 0)) * e(0, -1) + e(0, 0) * e(0, 1);
        case 2: return e(0, 0);
        case 3: return e(0, 1);
        case 4: return e(2, 0) * xor_bits(e(1, -1), e(1, 1));
        case 5: return 1 - e(2, 0);
        case 6: return e(1, 0);
        case 7: return e(1, 1);
        case 8: return (1 - e(0, -1)) * e(1, -1) + e(0, -1) * (1 - e(1, -1)) * e(2, 0);
        case 9: return e(2, -1);
        case 10: return e(2, 0);
        case 11: return 1 - e(1, 0);
        case 12: return e(2, -1) * xnor_bits(e(2, 0), e(1, 0));
        case 13: return e(3, -1);
        case 14: return e(3, 0);
        case 15: return (1 - e(1, 1)) * xnor_bits(e(2, 0), e(1, 0));
    }
    throw std::invalid_argument("r4_rule: bad index");
}

int r4_initial(unsigned i, u64 n) {
    if (i > 3 || n < 5 || n > 23) throw std::out_of_range("r4 initial table covers 5 <= n <= 23");
    return k_r4_init[i][n - 5];
}

int R4Recurrence::operator()(unsigned i, u64 n) {
    if (i > 3) throw std::invalid_argument("r4: corrector index must be 0..3");
    if (n < 5) throw std::invalid_argument("r4: n must be >= 5");
    if (n <= 23) return r4_initial(i, n);
    auto packed = [&](u64 q) {
        int p = 0;
        for (unsigned j = 0; j < 4; ++j) p |= (*this)(j, q) << j;
        return p;
    };
    const std::int8_t v = memo(dense_, sparse_, n, [&]() -> std::int8_t {
        const u64 m = n / 4;
        const unsigned d = static_cast<unsigned>(n % 4);
        int w[4][3];
        for (int o = 0; o < 3; ++o) {
            const int p = packed(m - 1 + static_cast<u64>(o));
            for (unsigned j = 0; j < 4; ++j) w[j][o] = (p >> j) & 1;
        }
        int out = 0;
        for (unsigned j = 0; j < 4; ++j) out |= bit(r4_rule(j, d, w), "r4 recurrence") << j;
        return static_cast<std::int8_t>(out);
    });
    return (v >> i) & 1;
}

int r4_definition(const Sequence& a, unsigned i, u64 n) {
    const i64 k = s64(n);
    auto A = [&](i64 x) { return s64(a(x)); };
    switch (i) {
        case 0: return static_cast<int>(A(4 * k) - (A(k - 3) + A(k - 2) + A(k - 1) + A(k) + 1));
        case 1: return static_cast<int>(A(4 * k + 1) - (A(k - 2) + A(k - 1) + A(k) + A(k + 1)));
        case 2: return static_cast<int>(A(4 * k + 2) - (A(k - 2) + A(k - 1) + A(k) + A(k + 1)));
        case 3: return static_cast<int>(A(4 * k + 3) - (A(k - 1) + A(k) + A(k + 1) + A(k + 2) - 1));
    }
    throw std::invalid_argument("r4: corrector index must be 0..3");
}

int r4_eps(unsigned i, u64 n, Method method, const Sequence* a, DfaoSource src) {
    if (i > 3) throw std::invalid_argument("r4: corrector index must be 0..3");
    if (n < 5) throw std::invalid_argument("r4: n must be >= 5");
    switch (method) {
        case Method::recurrence: {
            R4Recurrence rec;
            return rec(i, n);
        }
        case Method::dfao: return eval_dfao(build_dfao("r4-eps" + std::to_string(i), src), n);
        case Method::definition:
            if (!a) throw std::invalid_argument("r4: definition method needs an order-4 sequence");
            return r4_definition(*a, i, n);
        case Method::interval: break;
    }
    throw std::invalid_argument("r4: interval method does not apply");
}

// ---- order 5 ---------------------------------------------------------------

Pair r5_rule(unsigned d, Pair prev, Pair cur) {
    switch (d) {
        case 0: return {prev.e * (1 - cur.e), cur.e};
        case 1: return {cur.e, cur.h};
        case 2: return {cur.h, cur.e};
        case 3: return {cur.e, cur.h};
        case 4: return {cur.h, cur.e};
    }
    throw std::invalid_argument("r5_rule: digit out of range");
}

bool r5_known_transition(Pair prev, Pair cur) {
    return (prev == P00 && cur == P00) || (prev == P10 && cur == P00) || (prev == P00 && cur == P01) ||
           (prev == P10 && cur == P01) || (prev == P01 && cur == P10);
}

int r5_theta(unsigned d, Pair prev, Pair cur) {
    if (d > 4) throw std::invalid_argument("r5_theta: digit out of range");
    if (!r5_known_transition(prev, cur)) throw std::runtime_error("r5: transition outside the five that occur");
    if (cur == P00) return 1;
    if (cur == P01) return d % 2 == 1 ? 1 : 0;
    return d % 2 == 0 ? 1 : 0;  // ((0,1),(1,0))
}

int r5_eps4(unsigned d, Pair cur, Pair next) {
    const int sigma = cur.e + cur.h;
    switch (d) {
        case 0:
        case 2: return -2 - sigma - cur.e;
        case 1:
        case 3: return -2 - sigma - cur.h;
        case 4:
            if (!r5_known_transition(cur, next)) throw std::runtime_error("r5: transition outside the five that occur");
            if (cur == P00 && next == P00) return -2;
            if (cur == P10 && next == P01) return -4;
            return -3;
    }
    throw std::invalid_argument("r5_eps4: digit out of range");
}

int r5_theta_initial(u64 n) {
    if (n < 3 || n > 14) throw std::out_of_range("r5 theta initial range is 3..14");
    return k_r5_theta_init[n - 3];
}

int r5_eps4_initial(u64 n) {
    if (n < 3 || n > 14) throw std::out_of_range("r5 eps4 initial range is 3..14");
    return k_r5_eps4_init[n - 3];
}

Pair R5Recurrence::operator()(u64 n) {
    if (n <= 19) return {k_r5_seed_e[n], k_r5_seed_h[n]};
    const std::int8_t code = memo(dense_, sparse_, n, [&]() -> std::int8_t {
        const u64 m = n / 5;
        const Pair prev = (*this)(m - 1);
        const Pair cur = (*this)(m);
        const Pair v = r5_rule(static_cast<unsigned>(n % 5), prev, cur);
        if (v.e * v.h != 0) throw std::logic_error("r5: eps and eta both 1");
        return static_cast<std::int8_t>(v.code());
    });
    return Pair::from_code(code);
}

R5Values r5_complete(u64 n, Pair u_prev, Pair u_cur, Pair u_next) {
    // u_* are U at m-1, m, m+1 where n = 5m + d
    R5Values out;
    if (n < 15) {
        out.theta = r5_theta_initial(n);
        out.eps4 = r5_eps4_initial(n);
    } else {
        const unsigned d = static_cast<unsigned>(n % 5);
        out.theta = r5_theta(d, u_prev, u_cur);
        out.eps4 = r5_eps4(d, u_cur, u_next);
    }
    return out;
}

u64 t5(const Sequence& a, i64 m) { return window_sum(a, m, 5); }

R5Values r5_definition(const Sequence& a, u64 n) {
    const i64 k = s64(n);
    auto A = [&](i64 x) { return s64(a(x)); };
    auto T = [&](i64 m) { return s64(t5(a, m)); };
    R5Values v;
    v.eps = static_cast<int>(A(5 * k) - T(k) - 2);
    v.eta = static_cast<int>(T(k + 2) - 1 - A(5 * k + 2));
    v.theta = static_cast<int>(A(5 * k + 3) - T(k + 3) + 4);
    v.eps4 = static_cast<int>(A(5 * k + 4) - T(k + 4) + 2);
    return v;
}

R5Values r5_correctors(u64 n, Method method, const Sequence* a, DfaoSource src) {
    if (n < 3) throw std::invalid_argument("r5: n must be >= 3");
    R5Values v;
    auto finish = [&](auto&& U) {
        const Pair u = U(n);
        const u64 m = n / 5;
        const Pair prev = n >= 15 ? U(m - 1) : Pair{};
        const Pair cur = n >= 15 ? U(m) : Pair{};
        const Pair next = n >= 15 ? U(m + 1) : Pair{};
        v = r5_complete(n, prev, cur, next);
        v.eps = u.e;
        v.eta = u.h;
    };
    switch (method) {
        case Method::recurrence: {
            R5Recurrence rec;
            finish([&](u64 q) { return rec(q); });
            break;
        }
        case Method::dfao: {
            const Dfao m = build_dfao("r5-U", src);
            finish([&](u64 q) { return q == 0 ? Pair{} : Pair::from_code(eval_dfao(m, q)); });
            break;
        }
        case Method::definition:
            if (!a) throw std::invalid_argument("r5: definition method needs an order-5 sequence");
            v = r5_definition(*a, n);
            break;
        case Method::interval: throw std::invalid_argument("r5: interval method does not apply");
    }
    if (v.eps * v.eta != 0) throw std::logic_error("r5: eps and eta both 1 at n=" + std::to_string(n));
    return v;
}

// ---- kernel automata --------------------------------------------------------

namespace {

struct KernelSpec {
    unsigned base;
    u64 threshold;                                         // exact states below this
    std::function<int(u64)> exact;                         // packed value at n
    std::function<int(unsigned, int, int, int)> rule;      // packed value at base*m+d from m-1, m, m+1
    std::function<int(int)> output;                        // output code from packed value
    std::vector<std::string> labels;
};

constexpr int kLo = -2, kHi = 2, kWidth = kHi - kLo + 1;

Dfao build_kernel(const std::string& name, const KernelSpec& ks) {
    Dfao m;
    m.name = name;
    m.base = ks.base;
    m.labels = ks.labels;
    m.initial_state = 0;

    std::map<std::vector<int>, int> index;
    std::vector<std::vector<int>> keys;  // exact states use {-1, n}
    auto intern = [&](std::vector<int> key) {
        auto [it, inserted] = index.emplace(key, static_cast<int>(keys.size()));
        if (inserted) keys.push_back(std::move(key));
        return it->second;
    };
    auto window_at = [&](u64 n) {
        std::vector<int> w(kWidth);
        for (int o = kLo; o <= kHi; ++o)
            w[static_cast<std::size_t>(o - kLo)] = ks.exact(static_cast<u64>(static_cast<i64>(n) + o));
        return w;
    };

    intern({-1, 0});
    for (std::size_t s = 0; s < keys.size(); ++s) {
        const std::vector<int> key = keys[s];
        std::vector<int> row(ks.base);
        int out = 0;
        if (key[0] == -1) {
            const u64 q = static_cast<u64>(key[1]);
            out = ks.output(ks.exact(q));
            for (unsigned d = 0; d < ks.base; ++d) {
                const u64 c = q * ks.base + d;
                row[d] = c < ks.threshold ? intern({-1, static_cast<int>(c)}) : intern(window_at(c));
            }
        } else {
            out = ks.output(key[static_cast<std::size_t>(-kLo)]);
            auto val = [&](int off) { return key[static_cast<std::size_t>(off - kLo)]; };
            for (unsigned d = 0; d < ks.base; ++d) {
                std::vector<int> child(kWidth);
                for (int o = kLo; o <= kHi; ++o) {
                    const int t = static_cast<int>(d) + o;
                    const int b = static_cast<int>(ks.base);
                    const int shift = (t >= 0) ? t / b : -((-t + b - 1) / b);
                    const unsigned dd = static_cast<unsigned>(t - shift * b);
                    child[static_cast<std::size_t>(o - kLo)] = ks.rule(dd, val(shift - 1), val(shift), val(shift + 1));
                }
                row[d] = intern(std::move(child));
            }
        }
        if (m.delta.size() <= s) {
            m.delta.resize(s + 1);
            m.output.resize(s + 1);
        }
        m.delta[s] = row;
        m.output[s] = out;
    }
    m.validate();
    return m;
}

}  // namespace

Dfao build_kernel_dfao(const std::string& name) {
    constexpr u64 T = 64;
    if (name == "r3-eps") {
        auto rec = std::make_shared<Eps3Recurrence>();
        KernelSpec ks{3, T,
                      [rec](u64 n) { return n == 0 ? 0 : (*rec)(n); },
                      [](unsigned d, int p, int c, int) { return eps3_rule(d, p, c); },
                      [](int v) { return v; },
                      {"0", "1"}};
        return build_kernel(name, ks);
    }
    if (name.rfind("r4-eps", 0) == 0 && name.size() == 7 && name[6] >= '0' && name[6] <= '3') {
        const unsigned i = static_cast<unsigned>(name[6] - '0');
        auto rec = std::make_shared<R4Recurrence>();
        KernelSpec ks{4, T,
                      [rec](u64 n) {
                          if (n < 5) return 0;
                          int p = 0;
                          for (unsigned j = 0; j < 4; ++j) p |= (*rec)(j, n) << j;
                          return p;
                      },
                      [](unsigned d, int p, int c, int nx) {
                          int w[4][3];
                          for (unsigned j = 0; j < 4; ++j) {
                              w[j][0] = (p >> j) & 1;
                              w[j][1] = (c >> j) & 1;
                              w[j][2] = (nx >> j) & 1;
                          }
                          int out = 0;
                          for (unsigned j = 0; j < 4; ++j) out |= r4_rule(j, d, w) << j;
                          return out;
                      },
                      [i](int v) { return (v >> i) & 1; },
                      {"0", "1"}};
        return build_kernel(name, ks);
    }
    if (name == "r5-U") {
        auto rec = std::make_shared<R5Recurrence>();
        KernelSpec ks{5, T,
                      [rec](u64 n) { return (*rec)(n).code(); },
                      [](unsigned d, int p, int c, int) {
                          return r5_rule(d, Pair::from_code(p), Pair::from_code(c)).code();
                      },
                      [](int v) { return v; },
                      {"(0,0)", "(1,0)", "(0,1)"}};
        return build_kernel(name, ks);
    }
    throw std::invalid_argument("unknown automaton: " + name);
}

// ---- dense sets -------------------------------------------------------------

u64 definition_limit(unsigned order, std::size_t N) {
    const u64 n = N;
    switch (order) {
        case 3: return n >= 6 ? (n - 3) / 3 : 0;
        case 4: return n >= 7 ? (n - 3) / 4 : 0;
        case 5: return n >= 9 ? (n - 4) / 5 : 0;
    }
    return 0;
}

std::size_t CorrectorSet::slot(u64 n) const {
    if (!covers(n))
        throw std::out_of_range("corrector index " + std::to_string(n) + " outside [" + std::to_string(floor_) + ", " +
                                std::to_string(hi_) + "]");
    return static_cast<std::size_t>(n);
}

int CorrectorSet::eps(u64 n) const {
    if (order_ != 3 && order_ != 5) throw std::logic_error("eps(n) applies to orders 3 and 5");
    return v_[0][slot(n)];
}

int CorrectorSet::eps_i(unsigned i, u64 n) const {
    if (order_ != 4 || i > 3) throw std::logic_error("eps_i applies to order 4, i = 0..3");
    return v_[i][slot(n)];
}

int CorrectorSet::eta(u64 n) const {
    if (order_ != 5) throw std::logic_error("eta applies to order 5");
    return v_[1][slot(n)];
}

int CorrectorSet::theta(u64 n) const {
    if (order_ != 5) throw std::logic_error("theta applies to order 5");
    return v_[2][slot(n)];
}

int CorrectorSet::eps4(u64 n) const {
    if (order_ != 5) throw std::logic_error("eps4 applies to order 5");
    return v_[3][slot(n)];
}

R5Values CorrectorSet::r5(u64 n) const { return {eps(n), eta(n), theta(n), eps4(n)}; }

CorrectorSet make_correctors(unsigned order, Method method, u64 hi, const Sequence* a, DfaoSource src, Exec exec) {
    CorrectorSet cs;
    cs.order_ = order;
    cs.method_ = method;
    cs.hi_ = hi;
    switch (order) {
        case 3: cs.floor_ = 1; break;
        case 4: cs.floor_ = 5; break;
        case 5: cs.floor_ = 3; break;
        default: throw std::invalid_argument("correctors exist for orders 3, 4, 5 only");
    }
    if (method == Method::interval && order != 3) throw std::invalid_argument("interval method applies to order 3 only");
    if (method == Method::definition) {
        if (!a) throw std::invalid_argument("definition method needs a sequence");
        if (hi > definition_limit(order, a->size()))
            throw std::invalid_argument("sequence too short for definition method up to n=" + std::to_string(hi));
    }
    const std::size_t width = order == 3 ? 1 : 4;
    for (std::size_t j = 0; j < width; ++j) cs.v_[j].assign(static_cast<std::size_t>(hi + 1), 0);
    if (hi < cs.floor_) return cs;

    const i64 lo = static_cast<i64>(cs.floor_), top = static_cast<i64>(hi);
    auto store = [&](u64 n, std::size_t j, int v) { cs.v_[j][static_cast<std::size_t>(n)] = static_cast<std::int8_t>(v); };

    if (method == Method::recurrence) {
        if (order == 3) {
            Eps3Recurrence rec;
            for (i64 n = lo; n <= top; ++n) store(static_cast<u64>(n), 0, rec(static_cast<u64>(n)));
        } else if (order == 4) {
            R4Recurrence rec;
            for (i64 n = lo; n <= top; ++n)
                for (unsigned i = 0; i < 4; ++i) store(static_cast<u64>(n), i, rec(i, static_cast<u64>(n)));
        } else {
            R5Recurrence rec;
            for (i64 n = lo; n <= top; ++n) {
                const u64 q = static_cast<u64>(n);
                const Pair u = rec(q);
                const u64 m = q / 5;
                const R5Values v = q >= 15 ? r5_complete(q, rec(m - 1), rec(m), rec(m + 1)) : r5_complete(q, {}, {}, {});
                store(q, 0, u.e);
                store(q, 1, u.h);
                store(q, 2, v.theta);
                store(q, 3, v.eps4);
            }
        }
        return cs;
    }

    std::vector<Dfao> machines;
    if (method == Method::dfao) {
        if (order == 3) machines.push_back(build_dfao("r3-eps", src));
        if (order == 4)
            for (unsigned i = 0; i < 4; ++i) machines.push_back(build_dfao("r4-eps" + std::to_string(i), src));
        if (order == 5) machines.push_back(build_dfao("r5-U", src));
    }

    // Errors inside the parallel region are carried out and rethrown in index order.
    std::vector<std::string> errors(static_cast<std::size_t>(top + 1));
#pragma omp parallel for schedule(static) num_threads(worker_count()) if (exec == Exec::parallel)
    for (i64 n = lo; n <= top; ++n) {
        const u64 q = static_cast<u64>(n);
        try {
            if (order == 3) {
                int v = 0;
                if (method == Method::interval) v = eps3_interval(q);
                else if (method == Method::dfao) v = eval_dfao(machines[0], q);
                else v = eps3_definition(*a, q);
                store(q, 0, v);
            } else if (order == 4) {
                for (unsigned i = 0; i < 4; ++i)
                    store(q, i, method == Method::dfao ? eval_dfao(machines[i], q) : r4_definition(*a, i, q));
            } else {
                R5Values v;
                if (method == Method::dfao) {
                    auto U = [&](u64 x) { return x == 0 ? Pair{} : Pair::from_code(eval_dfao(machines[0], x)); };
                    const Pair u = U(q);
                    const u64 m = q / 5;
                    v = q >= 15 ? r5_complete(q, U(m - 1), U(m), U(m + 1)) : r5_complete(q, {}, {}, {});
                    v.eps = u.e;
                    v.eta = u.h;
                } else {
                    v = r5_definition(*a, q);
                }
                store(q, 0, v.eps);
                store(q, 1, v.eta);
                store(q, 2, v.theta);
                store(q, 3, v.eps4);
            }
        } catch (const std::exception& e) {
            errors[static_cast<std::size_t>(n)] = e.what();
        }
    }
    for (i64 n = lo; n <= top; ++n)
        if (!errors[static_cast<std::size_t>(n)].empty())
            throw std::runtime_error("corrector fill failed at n=" + std::to_string(n) + ": " +
                                     errors[static_cast<std::size_t>(n)]);
    return cs;
}

}  // namespace agolomb
