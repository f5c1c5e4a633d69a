#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace agolomb {

using Digits = std::vector<unsigned>;

/// Base-b digits of n, most significant first, no leading zeros. Rejects n = 0.
Digits digits_msd(std::uint64_t n, unsigned b);
std::uint64_t digits_value(const Digits& w, unsigned b);

/// Finite automaton with output, read most significant digit first.
struct Dfao {
    std::string name;
    unsigned base = 2;
    int initial_state = 0;
    std::vector<std::vector<int>> delta;  // delta[state][digit]
    std::vector<int> output;              // output code per state
    std::vector<std::string> labels;      // printable form of each output code

    std::size_t state_count() const { return delta.size(); }
    int step(int state, unsigned digit) const { return delta[static_cast<std::size_t>(state)][digit]; }
    int run(const Digits& w, int from) const;
    const std::string& label(int code) const { return labels.at(static_cast<std::size_t>(code)); }
    /// Throws std::logic_error on a transition outside [0, state_count) or a missing output.
    void validate() const;
};

/// Where an automaton comes from: the transcribed tables, or a kernel
/// automaton built from the correction-sequence recurrences.
enum class DfaoSource { table, recurrence };

const std::vector<std::string>& dfao_names();
bool is_dfao_name(const std::string& name);

/// Throws std::invalid_argument for an unknown name.
Dfao build_dfao(const std::string& name, DfaoSource source = DfaoSource::table);

/// Output code after reading digits_msd(n). Rejects n = 0.
int eval_dfao(const Dfao& m, std::uint64_t n);

/// "state output d0 d1 ... d{b-1}" per line.
std::string dump_dfao(const Dfao& m);

struct OrbitReport {
    std::size_t state_preperiod = 0;
    std::size_t state_period = 0;
    std::size_t preperiod = 0;  // of the output sequence
    std::size_t period = 0;
    std::vector<int> cycle;   // outputs over one output period, starting at preperiod
    std::vector<int> values;  // outputs at k = 0..k_max
};

/// Outputs on [P 0^k Q]_b for k = 0..k_max, with the eventual period of the
/// state orbit under the 0-transition found by Brent's method.
OrbitReport geometric_orbit(const Dfao& m, const Digits& P, const Digits& Q, unsigned k_max);

/// Recurrence-derived automaton; defined in correctors.cpp.
Dfao build_kernel_dfao(const std::string& name);

}  // namespace agolomb
