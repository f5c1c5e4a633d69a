#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "agolomb/analysis.hpp"
#include "agolomb/report.hpp"
#include "agolomb/sequence.hpp"

namespace agolomb {

enum class SeqFormat { bfile, csv, json, text };

SeqFormat parse_seq_format(const std::string& s);

/// b-file: one "n a(n)" line per term, n from 1.
void write_bfile(std::ostream& os, const Sequence& a);
/// Throws std::runtime_error on malformed lines or non-consecutive indices.
std::vector<u64> parse_bfile(std::istream& is);

void write_sequence(std::ostream& os, const Sequence& a, SeqFormat fmt);

/// {identity, range, pass, violation_count, samples, checked, unchecked[, note]}
std::string check_json(const CheckReport& c);
/// {title, pass, failures, checks: [...]}
std::string bundle_json(const ReportBundle& b, int indent = 2);
/// One aligned line per check.
std::string bundle_text(const ReportBundle& b);

std::string ratio_text(const RatioReport& r);
std::string cesaro_text(const CesaroReport& c);
/// Two-column TSV: k, C_{2^k}, then k, C_{3*2^(k-1)} under a second header.
std::string cesaro_tsv(const CesaroReport& c);
/// Two (n_lo, ratio) blocks: window maxima, then window minima.
std::string oscillation_tsv(const std::vector<OscillationWindow>& w);

/// r,M,stabilized,prefix,boundary_run
std::string meta_csv(const MetaReport& m);
/// Rows laid out like the printed table: r / M(r), then k / j_k / gap / G(k).
std::string meta_table_text(const MetaReport& m);
std::string meta_verdict_text(const MetaReport& m);

}  // namespace agolomb
