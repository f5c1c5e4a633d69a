#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "agolomb/dfao.hpp"
#include "agolomb/parallel.hpp"
#include "agolomb/sequence.hpp"

namespace agolomb {

enum class Method { interval, recurrence, dfao, definition };

const char* method_name(Method m);

// ---- order 3 ---------------------------------------------------------------

/// First and last element of I_k = [(11*3^k - 1)/2, (13*3^k - 3)/2].
std::pair<u64, u64> r3_interval(unsigned k);

int eps3_interval(u64 n);

/// eps(3m+d) from eps(m-1), eps(m); valid for m >= 2.
int eps3_rule(unsigned d, int prev, int cur);

class Eps3Recurrence {
public:
    int operator()(u64 n);

private:
    std::vector<std::int8_t> dense_;
    std::unordered_map<u64, std::int8_t> sparse_;
};

/// eps(n) = a(3n+3) - a(n-1) - a(n) - a(n+1) - 1.
int eps3_definition(const Sequence& a, u64 n);

int eps3(u64 n, Method method);

// ---- order 4 ---------------------------------------------------------------

/// w[j][o] = eps_j(m - 1 + o), o = 0, 1, 2. Returns eps_i(4m + d); valid for m >= 6.
int r4_rule(unsigned i, unsigned d, const int (&w)[4][3]);

/// eps_i(n) for 5 <= n <= 23.
int r4_initial(unsigned i, u64 n);

class R4Recurrence {
public:
    int operator()(unsigned i, u64 n);

private:
    std::vector<std::int8_t> dense_;  // all four bits packed per n, -1 unknown
    std::unordered_map<u64, std::int8_t> sparse_;
};

int r4_definition(const Sequence& a, unsigned i, u64 n);

int r4_eps(unsigned i, u64 n, Method method, const Sequence* a = nullptr, DfaoSource src = DfaoSource::table);

// ---- order 5 ---------------------------------------------------------------

/// U(n) = (eps(n), eta(n)).
struct Pair {
    int e = 0;
    int h = 0;
    bool operator==(const Pair&) const = default;
    int code() const { return e + 2 * h; }  // (0,0)=0, (1,0)=1, (0,1)=2
    static Pair from_code(int c) { return {c == 1 ? 1 : 0, c == 2 ? 1 : 0}; }
};

struct R5Values {
    int eps = 0;
    int eta = 0;
    int theta = 0;
    int eps4 = 0;
    bool operator==(const R5Values&) const = default;
};

/// U(5m+d) from U(m-1), U(m); valid for m >= 4.
Pair r5_rule(unsigned d, Pair prev, Pair cur);

/// True for the five transitions (U(m-1), U(m)) that occur.
bool r5_known_transition(Pair prev, Pair cur);

/// theta(5m+d) and eps4(5m+d) from U(m-1), U(m), U(m+1); valid for 5m+d >= 15.
int r5_theta(unsigned d, Pair prev, Pair cur);
int r5_eps4(unsigned d, Pair cur, Pair next);

/// theta and eps4 below the table range, 3 <= n <= 14.
int r5_theta_initial(u64 n);
int r5_eps4_initial(u64 n);

class R5Recurrence {
public:
    Pair operator()(u64 n);

private:
    std::vector<std::int8_t> dense_;  // pair code, -1 unknown
    std::unordered_map<u64, std::int8_t> sparse_;
};

/// Applies the theta / eps4 tables given U at n's m-1, m, m+1.
R5Values r5_complete(u64 n, Pair u_prev, Pair u_cur, Pair u_next);

R5Values r5_definition(const Sequence& a, u64 n);
u64 t5(const Sequence& a, i64 m);

R5Values r5_correctors(u64 n, Method method, const Sequence* a = nullptr, DfaoSource src = DfaoSource::table);

// ---- dense sets -------------------------------------------------------------

/// Dense corrector values for n in [floor, hi], filled by one method.
class CorrectorSet {
public:
    unsigned order() const { return order_; }
    Method method() const { return method_; }
    u64 floor() const { return floor_; }
    u64 hi() const { return hi_; }
    bool covers(u64 n) const { return n >= floor_ && n <= hi_; }

    int eps(u64 n) const;                // r = 3 and r = 5
    int eps_i(unsigned i, u64 n) const;  // r = 4
    int eta(u64 n) const;
    int theta(u64 n) const;
    int eps4(u64 n) const;
    R5Values r5(u64 n) const;

    friend CorrectorSet make_correctors(unsigned, Method, u64, const Sequence*, DfaoSource, Exec);

private:
    std::size_t slot(u64 n) const;

    unsigned order_ = 0;
    Method method_ = Method::recurrence;
    u64 floor_ = 1;
    u64 hi_ = 0;
    std::array<std::vector<std::int8_t>, 4> v_;
};

/// Largest n for which the definition method can be evaluated on a(1..N).
u64 definition_limit(unsigned order, std::size_t N);

/// Throws std::invalid_argument when the method does not apply to the order,
/// or when the definition method is requested without a long enough sequence.
CorrectorSet make_correctors(unsigned order, Method method, u64 hi, const Sequence* a = nullptr,
                             DfaoSource src = DfaoSource::table, Exec exec = Exec::parallel);

}  // namespace agolomb
