#include <gtest/gtest.h>

#include <algorithm>
#include <json.hpp>
#include <sstream>

#include "agolomb/identities.hpp"
#include "agolomb/report_io.hpp"

using namespace agolomb;
using nlohmann::json;

TEST(BFile, RoundTripIsByteIdentical) {
    const Sequence a = generate_almost_golomb(3, 5000);
    std::ostringstream first;
    write_bfile(first, a);
    std::istringstream in(first.str());
    const Sequence b(a.tag(), parse_bfile(in));
    EXPECT_EQ(b, a);
    std::ostringstream second;
    write_bfile(second, b);
    EXPECT_EQ(first.str(), second.str());
}

TEST(BFile, SkipsCommentsAndRejectsGarbage) {
    std::istringstream ok("# header\n1 1\n2 2\n\n3 2\n");
    EXPECT_EQ(parse_bfile(ok), (std::vector<u64>{1, 2, 2}));
    std::istringstream bad("1 1\n2 x\n");
    EXPECT_THROW(parse_bfile(bad), std::runtime_error);
    std::istringstream gap("1 1\n3 2\n");
    EXPECT_THROW(parse_bfile(gap), std::runtime_error);
}

TEST(Formats, ParseNames) {
    EXPECT_EQ(parse_seq_format("csv"), SeqFormat::csv);
    EXPECT_EQ(parse_seq_format("bfile"), SeqFormat::bfile);
    EXPECT_THROW(parse_seq_format("xml"), std::invalid_argument);
}

TEST(Formats, CsvAndJson) {
    const Sequence a = generate_almost_golomb(2, 4);
    std::ostringstream csv;
    write_sequence(csv, a, SeqFormat::csv);
    EXPECT_EQ(csv.str(), "n,a\n1,1\n2,2\n3,2\n4,3\n");

    std::ostringstream js;
    write_sequence(js, a, SeqFormat::json);
    const json j = json::parse(js.str());
    EXPECT_EQ(j.at("count"), 4);
    EXPECT_EQ(j.at("terms"), json::array({1, 2, 2, 3}));
    EXPECT_TRUE(j.contains("family"));
}

TEST(Reports, CheckJsonKeys) {
    CheckReport c = CheckReport::named("demo.definition.x", 1, 10);
    c.tick();
    c.record(7, 3, 4);
    const json j = json::parse(check_json(c));
    for (const char* k : {"identity", "range", "pass", "violation_count", "samples", "checked", "unchecked"})
        EXPECT_TRUE(j.contains(k)) << k;
    EXPECT_EQ(j.at("pass"), false);
    EXPECT_EQ(j.at("range"), json::array({1, 10}));
    EXPECT_EQ(j.at("samples")[0].at("index"), 7);
    EXPECT_EQ(j.at("samples")[0].at("expected"), 3);
    EXPECT_EQ(j.at("samples")[0].at("actual"), 4);
}

TEST(Reports, BundleJsonMatchesBundle) {
    const Sequence a = generate_gap_variant(2, 20000);
    ReportBundle b = check_gap2(a);
    b.add(gap2_printed_prefix(a));
    const json j = json::parse(bundle_json(b));
    EXPECT_EQ(j.at("pass"), b.pass());
    EXPECT_EQ(j.at("failures"), b.failures());
    EXPECT_EQ(j.at("checks").size(), b.checks.size());
    EXPECT_NE(bundle_text(b).find("FAIL"), std::string::npos);
}

TEST(Reports, MetaCsvHeader) {
    const MetaReport m = meta_structure(12);
    const std::string csv = meta_csv(m);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "r,M,stabilized,prefix,boundary_run");
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 12);
}
