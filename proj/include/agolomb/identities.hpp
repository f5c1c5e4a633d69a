#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "agolomb/correctors.hpp"
#include "agolomb/parallel.hpp"
#include "agolomb/report.hpp"
#include "agolomb/sequence.hpp"

namespace agolomb {

// Check names follow "<family>.<suite>.<identity>"; the suite tag is one of
// definition, denesting, automata, combinatorial.

ReportBundle check_r2(const Sequence& a, Exec exec = Exec::parallel);
ReportBundle check_r3(const Sequence& a, const CorrectorSet& eps, Exec exec = Exec::parallel);
ReportBundle check_r4(const Sequence& a, const CorrectorSet& eps, Exec exec = Exec::parallel);
ReportBundle check_r5(const Sequence& a, const CorrectorSet& c, Exec exec = Exec::parallel);
ReportBundle check_gap2(const Sequence& a);

/// The sixteen order-4 recurrences, both sides from definition-extracted values, 6 <= m <= m_hi.
ReportBundle r4_recurrence_sweep(const Sequence& a, std::uint64_t m_hi, Exec exec = Exec::parallel);
/// The ten order-5 recurrences for 4 <= m <= m_hi.
ReportBundle r5_recurrence_sweep(const Sequence& a, std::uint64_t m_hi, Exec exec = Exec::parallel);

/// Cross-method agreement over [floor, hi] with the recurrence as reference.
/// The definition method joins when a sequence is supplied.
ReportBundle corrector_agreement(unsigned order, std::uint64_t hi, const Sequence* a = nullptr,
                                 DfaoSource src = DfaoSource::table, Exec exec = Exec::parallel);

/// I_{k+1} = (3I_k+1) u (3I_k+2) u (3I_k+3) and |I_k| = 3^k for k <= k_max.
ReportBundle r3_interval_structure(unsigned k_max);

/// The printed gap-2 prefix 1,2,2,3,3,4,5,6,6,7,7,8,8.
CheckReport gap2_printed_prefix(const Sequence& a);

enum class Suite { definition, denesting, automata, combinatorial, all };

const char* suite_name(Suite s);
Suite parse_suite(const std::string& s);
bool suite_applies(Suite s, unsigned r);

struct InapplicableSuite : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct SuiteOptions {
    Exec exec = Exec::parallel;
    Method corrector_method = Method::recurrence;
    DfaoSource dfao_source = DfaoSource::table;
    bool window_check = true;
};

/// Runs every applicable check of the selected suite on an order-r sequence.
/// Exceptions raised by a check become a failing report. Throws
/// InapplicableSuite when nothing in the suite applies to r.
ReportBundle run_suite(const Sequence& a, unsigned r, Suite suite, const SuiteOptions& opt = {});

}  // namespace agolomb
