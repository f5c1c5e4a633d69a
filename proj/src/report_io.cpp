#include "agolomb/report_io.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace agolomb {

namespace {

using nlohmann::ordered_json;

ordered_json check_obj(const CheckReport& c) {
    ordered_json j;
    j["identity"] = c.name;
    j["range"] = {c.lo, c.hi};
    j["pass"] = c.pass();
    j["violation_count"] = c.violation_count;
    j["samples"] = ordered_json::array();
    for (const auto& v : c.samples) j["samples"].push_back({{"index", v.index}, {"expected", v.expected}, {"actual", v.actual}});
    j["checked"] = c.checked;
    j["unchecked"] = c.unchecked;
    if (!c.note.empty()) j["note"] = c.note;
    return j;
}

std::string fmt(const char* f, double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, x);
    return buf;
}

const char* verdict(const CheckReport& c) {
    if (c.checked == 0) return "n/a ";
    return c.pass() ? "PASS" : "FAIL";
}

}  // namespace

SeqFormat parse_seq_format(const std::string& s) {
    if (s == "bfile") return SeqFormat::bfile;
    if (s == "csv") return SeqFormat::csv;
    if (s == "json") return SeqFormat::json;
    if (s == "text") return SeqFormat::text;
    throw std::invalid_argument("unknown format: " + s);
}

void write_bfile(std::ostream& os, const Sequence& a) {
    for (std::size_t n = 1; n <= a.size(); ++n) os << n << ' ' << a.at(n) << '\n';
}

std::vector<u64> parse_bfile(std::istream& is) {
    std::vector<u64> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        u64 n = 0, v = 0;
        std::string rest;
        if (!(ls >> n >> v) || (ls >> rest))
            throw std::runtime_error("b-file line " + std::to_string(lineno) + ": expected 'n a(n)'");
        if (n != out.size() + 1)
            throw std::runtime_error("b-file line " + std::to_string(lineno) + ": index " + std::to_string(n) +
                                     " out of order");
        out.push_back(v);
    }
    return out;
}

void write_sequence(std::ostream& os, const Sequence& a, SeqFormat f) {
    switch (f) {
        case SeqFormat::bfile: write_bfile(os, a); break;
        case SeqFormat::csv:
            os << "n,a\n";
            for (std::size_t n = 1; n <= a.size(); ++n) os << n << ',' << a.at(n) << '\n';
            break;
        case SeqFormat::json: {
            ordered_json j;
            j["family"] = a.tag().describe();
            j["count"] = a.size();
            j["terms"] = a.terms();
            os << j.dump() << '\n';
            break;
        }
        case SeqFormat::text:
            for (std::size_t n = 1; n <= a.size(); ++n) os << (n > 1 ? "," : "") << a.at(n);
            os << '\n';
            break;
    }
}

std::string check_json(const CheckReport& c) { return check_obj(c).dump(); }

std::string bundle_json(const ReportBundle& b, int indent) {
    ordered_json j;
    j["title"] = b.title;
    j["pass"] = b.pass();
    j["failures"] = b.failures();
    j["checks"] = ordered_json::array();
    for (const auto& c : b.checks) j["checks"].push_back(check_obj(c));
    return j.dump(indent);
}

std::string bundle_text(const ReportBundle& b) {
    std::size_t w = 0;
    for (const auto& c : b.checks) w = std::max(w, c.name.size());
    std::ostringstream os;
    os << b.title << '\n';
    for (const auto& c : b.checks) {
        os << "  " << verdict(c) << "  " << c.name << std::string(w - c.name.size() + 2, ' ') << '[' << c.lo << ", "
           << c.hi << "]  checked " << c.checked;
        if (c.violation_count) os << "  violations " << c.violation_count << "  first n=" << c.first_index();
        if (!c.note.empty()) os << "  (" << c.note << ')';
        os << '\n';
    }
    os << (b.pass() ? "all checks pass" : std::to_string(b.failures()) + " check(s) failed") << '\n';
    return os.str();
}

std::string ratio_text(const RatioReport& r) {
    std::ostringstream os;
    os << "order " << r.order << " ratio families\n";
    for (const auto& f : r.families) {
        os << "  " << (f.skipped ? "SKIP" : verdict(f.check)) << "  " << f.family << ": " << f.identity;
        if (!f.skipped) os << "  k in [" << f.check.lo << ", " << f.check.hi << "]";
        if (!f.notice.empty()) os << "  (" << f.notice << ')';
        os << '\n';
        for (const auto& [k, q] : f.ratios) {
            os << "      k=" << k << "  ratio " << fmt("%.9f", q);
            if (f.limit != 0) os << "  limit " << fmt("%.9f", f.limit);
            os << '\n';
        }
    }
    return os.str();
}

std::string cesaro_text(const CesaroReport& c) {
    std::ostringstream os;
    os << "L1 = " << fmt("%.16f", kCesaroL1) << "   L2 = " << fmt("%.16f", kCesaroL2) << '\n';
    os << "  k  C(2^k)              |err1|      C(3*2^(k-1))        |err2|      tol         sign\n";
    for (const auto& r : c.rows) {
        char buf[200];
        std::snprintf(buf, sizeof buf, "%3u  %.15f  %.3e   %.15f  %.3e   %.3e   %s%s\n", r.k, r.c_pow, r.err1,
                      r.c_three, r.err2, r.tol, r.separated ? "+" : "-", r.within ? "" : "  OUT OF TOLERANCE");
        os << buf;
    }
    os << "limits " << verdict(c.limits) << ", separation for k >= " << c.sep_from << ' ' << verdict(c.separation)
       << '\n';
    if (c.warning) os << "warning: " << c.warning_text << '\n';
    return os.str();
}

std::string cesaro_tsv(const CesaroReport& c) {
    std::ostringstream os;
    os << "k\tC_pow2\n";
    for (const auto& r : c.rows) os << r.k << '\t' << fmt("%.15f", r.c_pow) << '\n';
    os << "\nk\tC_3pow2\n";
    for (const auto& r : c.rows) os << r.k << '\t' << fmt("%.15f", r.c_three) << '\n';
    return os.str();
}

std::string oscillation_tsv(const std::vector<OscillationWindow>& w) {
    std::ostringstream os;
    os << "n\tmax_ratio\n";
    for (const auto& x : w) os << x.lo << '\t' << fmt("%.9f", x.max_ratio) << '\n';
    os << "\nn\tmin_ratio\n";
    for (const auto& x : w) os << x.lo << '\t' << fmt("%.9f", x.min_ratio) << '\n';
    return os.str();
}

std::string meta_csv(const MetaReport& m) {
    std::ostringstream os;
    os << "r,M,stabilized,prefix,boundary_run\n";
    for (const auto& r : m.orders)
        os << r.r << ',' << r.M << ',' << (r.stabilized ? "true" : "false") << ',' << r.prefix << ','
           << r.boundary_run << '\n';
    return os.str();
}

std::string meta_table_text(const MetaReport& m) {
    std::ostringstream os;
    auto row = [&](const char* label, auto&& cells) {
        os << label;
        for (const auto& c : cells) {
            char buf[16];
            std::snprintf(buf, sizeof buf, "%4s", c.c_str());
            os << buf;
        }
        os << '\n';
    };
    for (unsigned lo = 2; lo <= m.r_max; lo += 17) {
        std::vector<std::string> rs, ms;
        for (unsigned r = lo; r < lo + 17 && r <= m.r_max; ++r) {
            rs.push_back(std::to_string(r));
            const auto& o = m.orders[r - 2];
            ms.push_back(std::to_string(o.M) + (o.stabilized ? "" : "?"));
        }
        row("r     ", rs);
        row("M(r)  ", ms);
        os << '\n';
    }
    std::vector<std::string> ks, js, gs, Gs;
    for (const auto& t : m.thresholds) {
        if (t.k < 3) continue;
        const unsigned jn = m.j(t.k + 1);
        ks.push_back(std::to_string(t.k));
        js.push_back(std::to_string(t.j));
        gs.push_back(jn ? std::to_string(jn - t.j) : "-");
        Gs.push_back(t.k <= m.golomb_G.size() ? std::to_string(m.golomb_G[t.k - 1]) : "-");
    }
    for (std::size_t lo = 0; lo < ks.size(); lo += 14) {
        const auto cut = [&](const std::vector<std::string>& v) {
            return std::vector<std::string>(v.begin() + static_cast<long>(lo),
                                            v.begin() + static_cast<long>(std::min(v.size(), lo + 14)));
        };
        row("k     ", cut(ks));
        row("j_k   ", cut(js));
        row("gap   ", cut(gs));
        row("G(k)  ", cut(Gs));
        os << '\n';
    }
    return os.str();
}

std::string meta_verdict_text(const MetaReport& m) {
    std::ostringstream os;
    os << bundle_text(m.bundle());
    if (!m.unstabilized.empty()) {
        os << "unstabilized orders (excluded from verdicts):";
        for (unsigned r : m.unstabilized) os << ' ' << r;
        os << '\n';
    }
    os << "verdicts are verified up to order " << m.r_max << ", not proved\n";
    return os.str();
}

}  // namespace agolomb
