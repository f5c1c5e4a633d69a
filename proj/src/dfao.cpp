#include "agolomb/dfao.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "dfao_tables.hpp"

namespace agolomb {

namespace {

// q0 q1 q2 c= c> c< e= e> e< r
const std::vector<std::vector<int>> k_r3_eps = {
    {0, 9, 1, 2}, {0, 9, 9, 3}, {0, 6, 9, 9}, {1, 5, 3, 4}, {1, 4, 4, 4},
    {0, 5, 5, 5}, {0, 8, 6, 7}, {0, 7, 7, 7}, {1, 8, 8, 8}, {0, 9, 9, 9},
};

struct TableSpec {
    const char* name;
    unsigned base;
    std::size_t states;
    const std::vector<std::vector<int>>* rows;
    bool pair_output;
};

const TableSpec k_specs[] = {
    {"r3-eps", 3, 10, &k_r3_eps, false},
    {"r4-eps0", 4, 30, &detail::k_r4_eps0, false},
    {"r4-eps1", 4, 30, &detail::k_r4_eps1, false},
    {"r4-eps2", 4, 29, &detail::k_r4_eps2, false},
    {"r4-eps3", 4, 30, &detail::k_r4_eps3, false},
    {"r5-U", 5, 23, &detail::k_r5_U, true},
};

const TableSpec& spec_for(const std::string& name) {
    for (const auto& s : k_specs)
        if (name == s.name) return s;
    throw std::invalid_argument("unknown automaton: " + name);
}

}  // namespace

Digits digits_msd(std::uint64_t n, unsigned b) {
    if (b < 2) throw std::invalid_argument("base must be >= 2");
    if (n == 0) throw std::invalid_argument("digits_msd: n must be >= 1");
    Digits w;
    while (n) {
        w.push_back(static_cast<unsigned>(n % b));
        n /= b;
    }
    std::reverse(w.begin(), w.end());
    return w;
}

std::uint64_t digits_value(const Digits& w, unsigned b) {
    std::uint64_t v = 0;
    for (unsigned d : w) v = v * b + d;
    return v;
}

int Dfao::run(const Digits& w, int from) const {
    int s = from;
    for (unsigned d : w) s = step(s, d);
    return s;
}

void Dfao::validate() const {
    if (delta.empty()) throw std::logic_error(name + ": no states");
    if (output.size() != delta.size()) throw std::logic_error(name + ": output table size mismatch");
    const int n = static_cast<int>(delta.size());
    if (initial_state < 0 || initial_state >= n) throw std::logic_error(name + ": bad initial state");
    for (std::size_t s = 0; s < delta.size(); ++s) {
        if (delta[s].size() != base) throw std::logic_error(name + ": row " + std::to_string(s) + " is not total");
        for (int t : delta[s])
            if (t < 0 || t >= n) throw std::logic_error(name + ": transition out of range in row " + std::to_string(s));
        if (output[s] < 0 || static_cast<std::size_t>(output[s]) >= labels.size())
            throw std::logic_error(name + ": output undefined in row " + std::to_string(s));
    }
}

const std::vector<std::string>& dfao_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& s : k_specs) v.emplace_back(s.name);
        return v;
    }();
    return names;
}

bool is_dfao_name(const std::string& name) {
    const auto& v = dfao_names();
    return std::find(v.begin(), v.end(), name) != v.end();
}

Dfao build_dfao(const std::string& name, DfaoSource source) {
    const TableSpec& spec = spec_for(name);
    if (source == DfaoSource::recurrence) return build_kernel_dfao(name);

    Dfao m;
    m.name = spec.name;
    m.base = spec.base;
    m.initial_state = 0;
    m.labels = spec.pair_output ? std::vector<std::string>{"(0,0)", "(1,0)", "(0,1)"}
                                : std::vector<std::string>{"0", "1"};
    for (const auto& row : *spec.rows) {
        m.output.push_back(row.at(0));
        m.delta.emplace_back(row.begin() + 1, row.end());
    }
    if (m.state_count() != spec.states)
        throw std::logic_error(name + ": expected " + std::to_string(spec.states) + " states");
    m.validate();
    return m;
}

int eval_dfao(const Dfao& m, std::uint64_t n) {
    return m.output[static_cast<std::size_t>(m.run(digits_msd(n, m.base), m.initial_state))];
}

std::string dump_dfao(const Dfao& m) {
    std::ostringstream os;
    for (std::size_t s = 0; s < m.state_count(); ++s) {
        os << s << ' ' << m.label(m.output[s]);
        for (int t : m.delta[s]) os << ' ' << t;
        os << '\n';
    }
    return os.str();
}

OrbitReport geometric_orbit(const Dfao& m, const Digits& P, const Digits& Q, unsigned k_max) {
    if (P.empty() || P.front() == 0) throw std::invalid_argument("P must be nonempty with a nonzero leading digit");
    for (unsigned d : P)
        if (d >= m.base) throw std::invalid_argument("digit out of range in P");
    for (unsigned d : Q)
        if (d >= m.base) throw std::invalid_argument("digit out of range in Q");

    const int x0 = m.run(P, m.initial_state);
    auto f = [&](int s) { return m.step(s, 0); };

    // Brent: period first, then preperiod
    std::size_t power = 1, lam = 1;
    int tortoise = x0, hare = f(x0);
    while (tortoise != hare) {
        if (power == lam) {
            tortoise = hare;
            power *= 2;
            lam = 0;
        }
        hare = f(hare);
        ++lam;
    }
    std::size_t mu = 0;
    tortoise = hare = x0;
    for (std::size_t i = 0; i < lam; ++i) hare = f(hare);
    while (tortoise != hare) {
        tortoise = f(tortoise);
        hare = f(hare);
        ++mu;
    }

    OrbitReport rep;
    rep.state_preperiod = mu;
    rep.state_period = lam;

    const std::size_t horizon = std::max<std::size_t>(k_max, mu + 2 * lam) + 1;
    std::vector<int> outs(horizon);
    int x = x0;
    for (std::size_t k = 0; k < horizon; ++k) {
        outs[k] = m.output[static_cast<std::size_t>(m.run(Q, x))];
        x = f(x);
    }
    rep.values.assign(outs.begin(), outs.begin() + static_cast<std::ptrdiff_t>(k_max + 1));

    // smallest output period dividing the state period
    std::size_t p = lam;
    for (std::size_t c = 1; c <= lam; ++c) {
        if (lam % c) continue;
        bool ok = true;
        for (std::size_t i = 0; i < lam && ok; ++i) ok = outs[mu + i] == outs[mu + (i + c) % lam];
        if (ok) {
            p = c;
            break;
        }
    }
    std::size_t t = mu;
    while (t > 0 && outs[t - 1] == outs[t - 1 + p]) --t;
    rep.period = p;
    rep.preperiod = t;
    rep.cycle.assign(outs.begin() + static_cast<std::ptrdiff_t>(t), outs.begin() + static_cast<std::ptrdiff_t>(t + p));
    return rep;
}

}  // namespace agolomb
