#pragma once

#include <cstdint>
#include <vector>

#include "agolomb/parallel.hpp"
#include "agolomb/report.hpp"
#include "agolomb/sequence.hpp"

namespace agolomb {

/// Definition-level oracle, independent of the run construction.
struct DefinitionReport {
    CheckReport monotone;    // a(n+1) >= a(n)
    CheckReport anchor;      // a(S_n) = n
    CheckReport minimality;  // no smaller m >= a(n-1) reaches n

    bool pass() const { return monotone.pass() && anchor.pass() && minimality.pass(); }
    /// Smallest index carrying any violation, or -1.
    std::int64_t first_violation() const;
    ReportBundle bundle() const;
};

DefinitionReport verify_defining_property(const Sequence& a, unsigned r, Exec exec = Exec::parallel);

/// Unit increments, subdiagonality, a(1) = 1, anchor monotonicity, run intervals.
ReportBundle structural_invariants(const Sequence& a, unsigned r);

/// S_{S_n} = r n - R_n with 0 <= R_n <= r(r-1)/2.
CheckReport nested_anchor_check(const Sequence& a, unsigned r, Exec exec = Exec::parallel);

struct WindowReport {
    unsigned order = 0;
    int C = 0;
    int D = 0;
    std::int64_t n0 = 0;
    std::vector<std::size_t> distinct_windows;  // per residue
    std::vector<std::uint64_t> conflicts;       // per residue
    std::vector<std::int64_t> first_conflict;   // per residue, -1 if none

    bool pass() const;
    std::size_t total_windows() const;
};

/// The tuple (d(n-C), ..., d(n+D)) must determine d(rn+i) for each residue i.
WindowReport window_determinism_check(const Sequence& a, unsigned r, Exec exec = Exec::parallel);

struct MultiplicityInfo {
    unsigned order = 0;
    std::uint64_t prefix_value = 0;  // a_r(r)
    std::uint64_t max_multiplicity = 0;
    std::uint64_t argmax = 0;          // first value attaining M(r)
    std::uint64_t values_covered = 0;  // fully contained runs
    bool stabilized = false;
    std::uint64_t boundary_run = 0;  // N_r(r-1)
    bool threshold_identity = true;  // N_r(r-1) = a_r(r) for r >= 4
};

MultiplicityInfo prefix_and_max_multiplicity(unsigned r, std::size_t N);
MultiplicityInfo multiplicity_info(const Sequence& a, unsigned r);

}  // namespace agolomb
