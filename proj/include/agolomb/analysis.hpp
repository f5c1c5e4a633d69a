#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "agolomb/parallel.hpp"
#include "agolomb/report.hpp"
#include "agolomb/sequence.hpp"

namespace agolomb {

inline constexpr double kPhi = 1.6180339887498948482;

// ---- ratios -----------------------------------------------------------------

struct RatioFamily {
    std::string family;    // e.g. "a(5*3^k)"
    std::string identity;  // exact statement checked in integers
    CheckReport check;     // index = k
    std::vector<std::pair<unsigned, double>> ratios;
    double limit = 0;  // 0 when the family has no stated limit
    bool skipped = false;
    std::string notice;
};

struct RatioReport {
    unsigned order = 0;
    std::vector<RatioFamily> families;

    bool pass() const;
};

/// Exact pivot identities and convergence of a(n)/n along geometric families.
RatioReport ratio_pivots(unsigned r, const Sequence& a);

// ---- Cesaro means -----------------------------------------------------------

inline constexpr double kCesaroL1 = 0.7075252408011506;  // 3/4 + log(6^(3/4)/4)
inline constexpr double kCesaroL2 = 0.7059276785521278;  // 2/3 + log(3^(2/3)/2)
inline constexpr double kCesaroFloor = 5e-4;
/// tol(k) = max(kCesaroFloor, kCesaroC * k / 2^k).
extern const double kCesaroC;

double cesaro_l1();
double cesaro_l2();
double cesaro_tolerance(unsigned k);

struct CesaroRow {
    unsigned k = 0;
    double c_pow = 0;    // C_{2^k}
    double c_three = 0;  // C_{3 * 2^(k-1)}
    double err1 = 0;
    double err2 = 0;
    double tol = 0;
    bool within = false;
    bool separated = false;  // c_pow > c_three
};

struct CesaroReport {
    unsigned k_min = 0;
    unsigned k_max = 0;
    unsigned sep_from = 0;
    std::vector<CesaroRow> rows;
    CheckReport limits;      // |C - L| <= tol(k)
    CheckReport separation;  // sign of C_{2^k} - C_{3*2^(k-1)} for k >= sep_from
    bool warning = false;    // error not decreasing over the last five k
    std::string warning_text;

    bool pass() const { return limits.pass() && separation.pass(); }
};

/// C_N = (1/N) sum_{n<=N} a(n)/n at N = 2^k and 3*2^(k-1), k_min <= k <= k_max.
/// Compensated summation over fixed checkpoint segments; the result does not
/// depend on exec or worker count.
CesaroReport cesaro_r2(const Sequence& a, unsigned k_max, unsigned k_min = 3, unsigned sep_from = 16,
                       Exec exec = Exec::parallel);

/// Plain serial C_N for a single N.
double cesaro_mean(const Sequence& a, std::size_t N);

// ---- oscillation ------------------------------------------------------------

struct OscillationWindow {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
    double min_ratio = 0;
    double max_ratio = 0;
};

/// Splits [N/2, N] into window_count windows and reports min/max of a(n)/n.
std::vector<OscillationWindow> oscillation_profile(const Sequence& a, unsigned window_count);

// ---- Golomb -----------------------------------------------------------------

/// Largest relative deviation of G(n) from phi^(2-phi) n^(phi-1) over [n_lo, N].
double golomb_asymptotic_deviation(const Sequence& g, std::uint64_t n_lo);

// ---- meta-structure ---------------------------------------------------------

struct Table1 {
    static const std::vector<unsigned>& M();     // r = 2..50
    static const std::vector<unsigned>& j();     // k = 3..30
    static const std::vector<unsigned>& gaps();  // k = 3..30
    static const std::vector<unsigned>& G();     // k = 3..30
};

std::size_t default_meta_terms(unsigned r);

struct OrderRow {
    unsigned r = 0;
    std::size_t terms = 0;
    std::uint64_t M = 0;
    bool stabilized = false;
    std::uint64_t prefix = 0;        // a_r(r)
    std::uint64_t boundary_run = 0;  // N_r(r-1)
    std::uint64_t argmax = 0;
};

struct Threshold {
    unsigned k = 0;
    unsigned j = 0;
};

struct MetaReport {
    unsigned r_max = 0;
    unsigned k_floor = 4;
    std::vector<OrderRow> orders;  // r = 2..r_max
    std::vector<Threshold> thresholds;
    std::vector<std::uint64_t> golomb_G;  // G(1..K)
    std::vector<std::uint64_t> golomb_S;  // S(1..K)
    std::vector<unsigned> unstabilized;

    CheckReport table_M;       // index = r
    CheckReport table_j;       // index = k
    CheckReport table_gaps;    // index = k
    CheckReport table_G;       // printed G(k) against the generated Golomb sequence
    CheckReport gap_law;       // j_{k+1} - j_k = G(k), k >= k_floor
    CheckReport partial_sum;   // j_k = S(k-1) + 2, k >= 4
    CheckReport prefix;        // a_r(r) = G(r-1), r >= 3
    CheckReport domination;    // M(r) = N_r(r-1), r >= 5
    CheckReport exceptions;    // j_4 - j_3 = 4, M(4) = 3 with N_4(3) = 2, N_3(2) = 3

    bool table1_match() const { return table_M.pass() && table_j.pass() && table_gaps.pass() && table_G.pass(); }
    bool conjectures_hold() const;
    bool stabilized() const { return unstabilized.empty(); }
    std::uint64_t M(unsigned r) const { return orders.at(r - 2).M; }
    /// j_k or 0 when not reached within r_max.
    unsigned j(unsigned k) const;
    ReportBundle bundle() const;
};

/// terms(r) = 0 selects default_meta_terms(r).
MetaReport meta_structure(unsigned r_max, std::size_t terms = 0, unsigned k_floor = 4, Exec exec = Exec::parallel);

}  // namespace agolomb
