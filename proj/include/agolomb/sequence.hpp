#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace agolomb {

using u64 = std::uint64_t;
using i64 = std::int64_t;

enum class Family { almost_golomb, golomb, gap_variant, mallows_r2 };

struct FamilyTag {
    Family family = Family::almost_golomb;
    unsigned param = 2;  // order r or gap s; unused for golomb

    std::string describe() const;
    bool operator==(const FamilyTag&) const = default;
};

/// Dense term array a(1..N). Reads at k <= 0 return 0.
class Sequence {
public:
    Sequence() = default;
    Sequence(FamilyTag tag, std::vector<u64> terms);

    const FamilyTag& tag() const { return tag_; }
    std::size_t size() const { return terms_.size(); }

    /// a(k) with zero extension; throws std::out_of_range for k > N.
    u64 operator()(i64 k) const {
        if (k <= 0) return 0;
        if (static_cast<std::size_t>(k) > terms_.size())
            throw std::out_of_range("sequence index " + std::to_string(k) + " beyond N=" +
                                    std::to_string(terms_.size()));
        return terms_[static_cast<std::size_t>(k - 1)];
    }

    /// Unchecked read for 1 <= k <= N.
    u64 at(std::size_t k) const { return terms_[k - 1]; }

    const std::vector<u64>& terms() const { return terms_; }

    /// Copy with a(k) replaced.
    Sequence with_term(std::size_t k, u64 value) const;

    bool operator==(const Sequence& o) const { return terms_ == o.terms_; }

private:
    FamilyTag tag_;
    std::vector<u64> terms_;
};

struct RunEntry {
    u64 value = 0;
    u64 anchor = 0;  // S_m
    u64 length = 0;  // L_m
};

/// Fully contained runs of a sequence. entries[m-1] describes value m.
struct RunTable {
    unsigned order = 0;
    std::vector<RunEntry> entries;
    /// Values m >= 3 whose positional length disagrees with a(m+1) - a(m+1-r),
    /// or whose anchor disagrees with the window sum.
    std::vector<u64> mismatched_values;

    u64 max_value() const { return entries.size(); }
    u64 length(u64 m) const { return entries.at(m - 1).length; }
    u64 anchor(u64 m) const { return entries.at(m - 1).anchor; }
    bool consistent() const { return mismatched_values.empty(); }
};

/// d(n) = a(n+1) - a(n) for 1 <= n < N, with d(0) = 1.
struct DiffSeq {
    std::vector<std::uint8_t> d;  // d[n] for 0 <= n < N

    std::uint8_t operator()(i64 n) const { return d.at(static_cast<std::size_t>(n)); }
    std::size_t size() const { return d.size(); }
};

struct GolombPair {
    std::vector<u64> G;  // G[k-1] = G(k)
    std::vector<u64> S;  // S[k-1] = G(1) + ... + G(k)

    u64 g(u64 k) const { return G.at(k - 1); }
    u64 s(u64 k) const { return k == 0 ? 0 : S.at(k - 1); }
};

Sequence generate_almost_golomb(unsigned r, std::size_t N);
GolombPair generate_golomb(std::size_t K);
Sequence golomb_sequence(std::size_t K);
Sequence generate_r2_mallows(std::size_t N);
Sequence generate_gap_variant(unsigned s, std::size_t N);

/// Window sum a(n) + ... + a(n-r+1) with zero extension.
u64 window_sum(const Sequence& a, i64 n, unsigned r);

DiffSeq first_differences(const Sequence& a);
RunTable run_table(const Sequence& a, unsigned r);

}  // namespace agolomb
