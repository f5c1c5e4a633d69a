// agolomb: generate, verify and analyze almost Golomb sequences.
//
// Exit codes: 0 pass, 1 identity failure, 2 usage error, 3 inapplicable
// suite, 4 unstabilized data.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "agolomb/analysis.hpp"
#include "agolomb/correctors.hpp"
#include "agolomb/dfao.hpp"
#include "agolomb/identities.hpp"
#include "agolomb/report_io.hpp"
#include "agolomb/sequence.hpp"

using namespace agolomb;

namespace {

enum Exit { kOk = 0, kFail = 1, kUsage = 2, kInapplicable = 3, kUnstable = 4 };

struct Output {
    std::string path;

    void emit(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream f(path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open " + path);
        f << text;
    }
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---- gen --------------------------------------------------------------------

struct GenArgs {
    std::optional<unsigned> order;
    bool golomb = false;
    std::optional<unsigned> gap;
    bool mallows = false;
    std::size_t count = 100;
    std::string format = "text";
    Output out;
};

int cmd_gen(const GenArgs& g) {
    Sequence a;
    if (g.order) a = generate_almost_golomb(*g.order, g.count);
    else if (g.golomb) a = golomb_sequence(g.count);
    else if (g.gap) a = generate_gap_variant(*g.gap, g.count);
    else if (g.mallows) a = generate_r2_mallows(g.count);
    else throw UsageError("gen needs one of --order, --golomb, --gap, --mallows");
    std::ostringstream os;
    write_sequence(os, a, parse_seq_format(g.format));
    g.out.emit(os.str());
    return kOk;
}

// ---- verify -----------------------------------------------------------------

struct VerifyArgs {
    std::optional<unsigned> order;
    std::optional<unsigned> gap;
    std::size_t count = 100000;
    std::string suite = "all";
    std::string method = "recurrence";
    std::string source = "table";
    std::string format = "json";
    bool serial = false;
    Output out;
};

Method parse_method(const std::string& s) {
    for (Method m : {Method::interval, Method::recurrence, Method::dfao, Method::definition})
        if (s == method_name(m)) return m;
    throw UsageError("unknown method: " + s);
}

DfaoSource parse_source(const std::string& s) {
    if (s == "table") return DfaoSource::table;
    if (s == "recurrence") return DfaoSource::recurrence;
    throw UsageError("unknown source: " + s);
}

int cmd_verify(const VerifyArgs& v) {
    Suite suite;
    try {
        suite = parse_suite(v.suite);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    ReportBundle b;
    if (v.gap) {
        if (*v.gap != 2) {
            std::cerr << "only the gap-2 variant has identity checks\n";
            return kInapplicable;
        }
        const Sequence a = generate_gap_variant(2, v.count);
        b = check_gap2(a);
        b.add(gap2_printed_prefix(a));
    } else {
        if (!v.order) throw UsageError("verify needs --order or --gap");
        const unsigned r = *v.order;
        if (r < 2) throw UsageError("--order must be >= 2");
        if (!suite_applies(suite, r)) {
            std::cerr << "suite '" << v.suite << "' does not apply to order " << r << '\n';
            return kInapplicable;
        }
        SuiteOptions opt;
        opt.exec = v.serial ? Exec::serial : Exec::parallel;
        opt.corrector_method = parse_method(v.method);
        opt.dfao_source = parse_source(v.source);
        const Sequence a = generate_almost_golomb(r, v.count);
        b = run_suite(a, r, suite, opt);
    }
    if (v.format == "json") v.out.emit(bundle_json(b) + "\n");
    else if (v.format == "text") v.out.emit(bundle_text(b));
    else throw UsageError("verify --format is json or text");
    return b.pass() ? kOk : kFail;
}

// ---- dfao -------------------------------------------------------------------

struct DfaoArgs {
    std::string which;
    std::optional<std::uint64_t> eval;
    bool dump = false;
    std::string geometric;
    std::string source = "table";
    Output out;
};

int cmd_dfao(const DfaoArgs& d) {
    if (!is_dfao_name(d.which)) throw UsageError("unknown automaton: " + d.which);
    const Dfao m = build_dfao(d.which, parse_source(d.source));
    const int modes = (d.eval ? 1 : 0) + (d.dump ? 1 : 0) + (d.geometric.empty() ? 0 : 1);
    if (modes != 1) throw UsageError("dfao needs exactly one of --eval, --dump, --geometric");
    if (d.eval) {
        if (*d.eval == 0) throw UsageError("--eval needs n >= 1");
        d.out.emit(m.label(eval_dfao(m, *d.eval)) + "\n");
    } else if (d.dump) {
        d.out.emit(dump_dfao(m));
    } else {
        unsigned long long P = 0, Q = 0;
        unsigned k_max = 0;
        if (std::sscanf(d.geometric.c_str(), "%llu,%llu,%u", &P, &Q, &k_max) != 3 || P == 0)
            throw UsageError("--geometric expects P,Q,kmax with P >= 1");
        const Digits wq = Q == 0 ? Digits{} : digits_msd(Q, m.base);
        const OrbitReport o = geometric_orbit(m, digits_msd(P, m.base), wq, k_max);
        std::ostringstream os;
        os << "preperiod " << o.preperiod << "\nperiod " << o.period << "\ncycle";
        for (int c : o.cycle) os << ' ' << m.label(c);
        os << "\nvalues";
        for (int c : o.values) os << ' ' << m.label(c);
        os << '\n';
        d.out.emit(os.str());
    }
    return kOk;
}

// ---- analyze ----------------------------------------------------------------

struct AnalyzeArgs {
    unsigned order = 2;
    std::optional<unsigned> k_max;
    std::size_t count = 1000000;
    unsigned windows = 50;
    std::string tsv;
    Output out;
};

std::size_t ratio_terms(unsigned r, unsigned k_max) {
    std::size_t n = 10;
    for (unsigned i = 0; i < k_max && n < 50000000; ++i) n *= r;
    return std::min<std::size_t>(n, 50000000);
}

int cmd_ratios(const AnalyzeArgs& z) {
    if (z.order < 2 || z.order > 5) throw UsageError("ratios need --order in 2..5");
    const std::size_t N = z.k_max ? ratio_terms(z.order, *z.k_max) : z.count;
    const Sequence a = generate_almost_golomb(z.order, N);
    const RatioReport rep = ratio_pivots(z.order, a);
    z.out.emit(ratio_text(rep));
    return rep.pass() ? kOk : kFail;
}

int cmd_cesaro(const AnalyzeArgs& z) {
    const unsigned k = z.k_max.value_or(20);
    if (k < 3 || k > 30) throw UsageError("cesaro needs 3 <= --kmax <= 30");
    const Sequence a = generate_almost_golomb(2, std::size_t{3} << (k - 1));
    const CesaroReport rep = cesaro_r2(a, k, 3, std::min(16u, k));
    z.out.emit(cesaro_text(rep));
    if (!z.tsv.empty()) Output{z.tsv}.emit(cesaro_tsv(rep));
    return rep.pass() ? kOk : kFail;
}

int cmd_oscillation(const AnalyzeArgs& z) {
    if (z.order < 2) throw UsageError("--order must be >= 2");
    if (z.count < 1000) throw UsageError("oscillation needs --count >= 1000");
    const Sequence a = generate_almost_golomb(z.order, z.count);
    const std::string tsv = oscillation_tsv(oscillation_profile(a, z.windows));
    z.out.emit(tsv);
    if (!z.tsv.empty()) Output{z.tsv}.emit(tsv);
    return kOk;
}

// ---- meta -------------------------------------------------------------------

struct MetaArgs {
    unsigned max_order = 50;
    bool table1 = false;
    bool csv = false;
    std::size_t terms = 0;
    Output out;
};

int cmd_meta(const MetaArgs& m) {
    if (m.max_order < 10) throw UsageError("--max-order must be >= 10");
    const MetaReport rep = meta_structure(m.max_order, m.terms);
    if (m.csv) {
        m.out.emit(meta_csv(rep));
    } else {
        m.out.emit(meta_table_text(rep) + meta_verdict_text(rep));
    }
    if (!rep.stabilized()) {
        std::cerr << "unstabilized orders present; raise --terms\n";
        return kUnstable;
    }
    if (m.table1) return rep.table1_match() ? kOk : kFail;
    return rep.conjectures_hold() && rep.table1_match() ? kOk : kFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"almost Golomb sequences: generation, identity checks, automata, analysis"};
    app.require_subcommand(1);

    GenArgs g;
    auto* gen = app.add_subcommand("gen", "emit a sequence");
    auto* o_order = gen->add_option("--order", g.order, "almost Golomb order r >= 2")->check(CLI::Range(2u, 100000u));
    auto* o_golomb = gen->add_flag("--golomb", g.golomb, "Golomb's sequence");
    auto* o_gap = gen->add_option("--gap", g.gap, "gap variant a(a(n)+a(n-s)) = n")->check(CLI::Range(1u, 1000u));
    auto* o_mallows = gen->add_flag("--mallows", g.mallows, "order 2 from the nested recurrence");
    o_order->excludes(o_golomb, o_gap, o_mallows);
    o_golomb->excludes(o_gap, o_mallows);
    o_gap->excludes(o_mallows);
    gen->add_option("--count,-n", g.count, "number of terms")->check(CLI::Range(std::size_t{1}, std::size_t{500000000}));
    gen->add_option("--format", g.format, "bfile | csv | json | text")
        ->check(CLI::IsMember({"bfile", "csv", "json", "text"}));
    gen->add_option("--out,-o", g.out.path, "write to file");

    VerifyArgs v;
    auto* ver = app.add_subcommand("verify", "run identity suites");
    auto* v_order = ver->add_option("--order", v.order, "order r >= 2");
    auto* v_gap = ver->add_option("--gap", v.gap, "gap variant (2 only)");
    v_order->excludes(v_gap);
    ver->add_option("--count,-n", v.count, "number of terms")->check(CLI::Range(std::size_t{10}, std::size_t{500000000}));
    ver->add_option("--suite", v.suite, "definition | denesting | automata | combinatorial | all");
    ver->add_option("--method", v.method, "corrector source: interval | recurrence | dfao | definition");
    ver->add_option("--source", v.source, "automaton source: table | recurrence");
    ver->add_option("--format", v.format, "json | text");
    ver->add_flag("--serial", v.serial, "single-threaded sweeps");
    ver->add_option("--out,-o", v.out.path, "write to file");

    DfaoArgs d;
    auto* dfa = app.add_subcommand("dfao", "query the correction automata");
    dfa->add_option("--which", d.which, "r3-eps | r4-eps0..3 | r5-U")->required();
    dfa->add_option("--eval", d.eval, "output at n");
    dfa->add_flag("--dump", d.dump, "transition table");
    dfa->add_option("--geometric", d.geometric, "P,Q,kmax: outputs on [P 0^k Q]");
    dfa->add_option("--source", d.source, "table | recurrence");
    dfa->add_option("--out,-o", d.out.path, "write to file");

    AnalyzeArgs z;
    auto* ana = app.add_subcommand("analyze", "ratios, Cesaro means, oscillation");
    ana->require_subcommand(1);
    auto* rat = ana->add_subcommand("ratios", "exact pivot identities and ratio limits");
    rat->add_option("--order", z.order, "2..5")->required();
    rat->add_option("--kmax", z.k_max, "largest k of interest");
    rat->add_option("--count,-n", z.count, "number of terms when --kmax is absent");
    rat->add_option("--out,-o", z.out.path, "write to file");
    auto* ces = ana->add_subcommand("cesaro", "order-2 Cesaro means against both limits");
    ces->add_option("--kmax", z.k_max, "largest k (default 20)");
    ces->add_option("--tsv", z.tsv, "plot data file");
    ces->add_option("--out,-o", z.out.path, "write to file");
    auto* osc = ana->add_subcommand("oscillation", "min/max of a(n)/n over tail windows, TSV");
    osc->add_option("--order", z.order, "order r >= 2")->required();
    osc->add_option("--count,-n", z.count, "number of terms");
    osc->add_option("--windows", z.windows, "window count")->check(CLI::Range(1u, 100000u));
    osc->add_option("--tsv", z.tsv, "also write the TSV here");
    osc->add_option("--out,-o", z.out.path, "write to file");

    MetaArgs m;
    auto* met = app.add_subcommand("meta", "maximal multiplicities across orders");
    met->add_option("--max-order", m.max_order, "largest order R (>= 10; 700 is a long run)");
    met->add_flag("--table1", m.table1, "diff against the printed table");
    met->add_flag("--csv", m.csv, "CSV rows r,M,stabilized,prefix,boundary_run");
    met->add_option("--terms", m.terms, "terms per order (default max(200000, 4000 r))");
    met->add_option("--out,-o", m.out.path, "write to file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*gen) return cmd_gen(g);
        if (*ver) return cmd_verify(v);
        if (*dfa) return cmd_dfao(d);
        if (*rat) return cmd_ratios(z);
        if (*ces) return cmd_cesaro(z);
        if (*osc) return cmd_oscillation(z);
        if (*met) return cmd_meta(m);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kFail;
    }
    return kUsage;
}
