#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "agolomb/report.hpp"

namespace agolomb {

enum class Exec { serial, parallel };

/// Worker count for parallel sweeps. AGOLOMB_THREADS overrides the default.
int worker_count();

/// Runs `body(n, rep)` for every n in [lo, hi]. The body calls rep.tick() and
/// rep.record(). Parallel chunks are merged in index order, so the result is
/// identical to the serial run regardless of worker count.
template <class Body>
CheckReport sweep(std::string name, std::int64_t lo, std::int64_t hi, Exec exec, Body&& body) {
    CheckReport out;
    out.name = std::move(name);
    out.lo = lo;
    out.hi = hi;
    if (hi < lo) return out;

    if (exec == Exec::serial) {
        for (std::int64_t n = lo; n <= hi; ++n) body(n, out);
        return out;
    }

    const std::int64_t span = hi - lo + 1;
    const std::int64_t chunks = std::max<std::int64_t>(1, std::min<std::int64_t>(span / 4096 + 1, 256));
    std::vector<CheckReport> parts(static_cast<std::size_t>(chunks));
#pragma omp parallel for schedule(dynamic, 1) num_threads(worker_count())
    for (std::int64_t c = 0; c < chunks; ++c) {
        const std::int64_t a = lo + span * c / chunks;
        const std::int64_t b = lo + span * (c + 1) / chunks - 1;
        CheckReport& part = parts[static_cast<std::size_t>(c)];
        for (std::int64_t n = a; n <= b; ++n) body(n, part);
    }
    for (const auto& p : parts) out.absorb(p);
    return out;
}

}  // namespace agolomb
