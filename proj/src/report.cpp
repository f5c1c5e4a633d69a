#include "agolomb/report.hpp"

#include <cstdlib>
#include <thread>

#include "agolomb/parallel.hpp"

namespace agolomb {

void CheckReport::record(std::int64_t index, std::int64_t expected, std::int64_t actual) {
    ++violation_count;
    if (samples.size() < kSampleCap) samples.push_back({index, expected, actual});
}

void CheckReport::absorb(const CheckReport& later) {
    violation_count += later.violation_count;
    checked += later.checked;
    unchecked += later.unchecked;
    for (const auto& v : later.samples) {
        if (samples.size() >= kSampleCap) break;
        samples.push_back(v);
    }
    if (note.empty()) note = later.note;
}

bool ReportBundle::pass() const {
    if (checks.empty()) return false;
    for (const auto& c : checks)
        if (!c.pass()) return false;
    return true;
}

std::uint64_t ReportBundle::failures() const {
    std::uint64_t f = 0;
    for (const auto& c : checks) f += c.pass() ? 0 : 1;
    return f;
}

void ReportBundle::append(const ReportBundle& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

const CheckReport* ReportBundle::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

int worker_count() {
    if (const char* env = std::getenv("AGOLOMB_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
#endif
}

}  // namespace agolomb
