#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace agolomb {

struct Violation {
    std::int64_t index = 0;
    std::int64_t expected = 0;
    std::int64_t actual = 0;

    bool operator==(const Violation&) const = default;
};

struct CheckReport {
    static constexpr std::size_t kSampleCap = 10;

    std::string name;
    std::int64_t lo = 0;
    std::int64_t hi = -1;  // empty range when hi < lo
    std::vector<Violation> samples;
    std::uint64_t violation_count = 0;
    std::uint64_t checked = 0;
    std::uint64_t unchecked = 0;
    std::string note;

    static CheckReport named(std::string name, std::int64_t lo, std::int64_t hi) {
        CheckReport c;
        c.name = std::move(name);
        c.lo = lo;
        c.hi = hi;
        return c;
    }

    bool pass() const { return violation_count == 0 && checked > 0; }
    bool empty_range() const { return checked == 0; }

    void record(std::int64_t index, std::int64_t expected, std::int64_t actual);
    void tick(std::uint64_t n = 1) { checked += n; }
    /// Merge a report covering a later, disjoint subrange.
    void absorb(const CheckReport& later);
    std::int64_t first_index() const { return samples.empty() ? -1 : samples.front().index; }
};

struct ReportBundle {
    std::string title;
    std::vector<CheckReport> checks;

    bool pass() const;
    std::uint64_t failures() const;
    void add(CheckReport r) { checks.push_back(std::move(r)); }
    void append(const ReportBundle& other);
    const CheckReport* find(const std::string& name) const;
};

}  // namespace agolomb
