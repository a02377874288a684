#include <gtest/gtest.h>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"
#include "quadrep/harness.hpp"

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = quadrep::cli::run(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream is(text);
    for (std::string line; std::getline(is, line);) lines.push_back(line);
    return lines;
}

TEST(ParseRange, Syntax) {
    using V = std::vector<std::int64_t>;
    EXPECT_EQ(quadrep::parse_range("1..5"), (V{1, 2, 3, 4, 5}));
    EXPECT_EQ(quadrep::parse_range("1,3,5"), (V{1, 3, 5}));
    EXPECT_EQ(quadrep::parse_range("7,1..3,2"), (V{1, 2, 3, 7}));
    EXPECT_EQ(quadrep::parse_range("1..10:odd"), (V{1, 3, 5, 7, 9}));
    EXPECT_EQ(quadrep::parse_range("0..6:even"), (V{0, 2, 4, 6}));
    EXPECT_EQ(quadrep::parse_range("-2..1"), (V{-2, -1, 0, 1}));
}

TEST(ParseRange, Errors) {
    EXPECT_THROW(quadrep::parse_range(""), quadrep::domain_error);
    EXPECT_THROW(quadrep::parse_range("5..1"), quadrep::domain_error);
    EXPECT_THROW(quadrep::parse_range("1..x"), quadrep::domain_error);
    EXPECT_THROW(quadrep::parse_range("1..4:prime"), quadrep::domain_error);
    EXPECT_THROW(quadrep::parse_range("2:odd"), quadrep::domain_error);
}

TEST(Records, JsonShape) {
    const auto& claim = quadrep::find_claim("rel-2.1");
    const auto rec = quadrep::verify_cell(claim, {{"a", 1}, {"m", 1}}, 1);
    EXPECT_EQ(quadrep::to_json_line(rec),
              R"({"claim":"rel-2.1","params":{"a":1,"m":1},"n":1,"lhs":32,"rhs":32,"pass":true,"skipped":false})");
    const auto skipped = quadrep::verify_cell(quadrep::find_claim("rel-2.3"), {{"a", 1}, {"m", 0}}, 1);
    EXPECT_TRUE(skipped.skipped);
    EXPECT_FALSE(skipped.pass);
    EXPECT_EQ(quadrep::to_json_line(skipped),
              R"({"claim":"rel-2.3","params":{"a":1,"m":0},"n":1,"lhs":null,"rhs":null,"pass":false,"skipped":true})");
}

TEST(Records, FractionalPredictionIsAFailure) {
    quadrep::VerificationRecord r{"x", {}, 3, 4, quadrep::Rational(9, 2), false, false};
    EXPECT_EQ(nlohmann::json::parse(quadrep::to_json_line(r))["rhs"], "9/2");
}

TEST(Summary, LocalizesFirstFailure) {
    std::vector<quadrep::VerificationRecord> records;
    for (std::int64_t n = 1; n <= 6; ++n) {
        quadrep::VerificationRecord r;
        r.claim = "c";
        r.n = n;
        r.lhs = n;
        r.rhs = quadrep::Rational(n >= 4 ? n + 1 : n);
        r.pass = n < 4;
        records.push_back(r);
    }
    const auto summary = quadrep::summarize(records);
    EXPECT_EQ(summary.failed, 3u);
    EXPECT_EQ(summary.exit_code(), 1);
    ASSERT_TRUE(summary.first_failure.has_value());
    EXPECT_EQ(summary.first_failure->n, 4);
    std::ostringstream os;
    quadrep::write_summary(os, summary);
    EXPECT_NE(os.str().find("first failure: {\"claim\":\"c\""), std::string::npos);
}

TEST(Sweep, GuardedFamilyProducesSkips) {
    quadrep::SweepRequest req;
    req.claim_ids = {"rel-2.4"};
    req.param_ranges = {{"a", {1}}, {"k", {0}}, {"m", {0}}};
    req.ns = quadrep::parse_range("1..10");
    const auto records = quadrep::run_sweep(req);
    const auto summary = quadrep::summarize(records);
    EXPECT_EQ(summary.total, 10u);
    EXPECT_EQ(summary.passed, 5u);
    EXPECT_EQ(summary.skipped, 5u);
    EXPECT_EQ(summary.exit_code(), 0);
    for (const auto& r : records) EXPECT_EQ(r.skipped, r.n % 2 == 1);
}

TEST(Sweep, OrderingIsDeterministicAcrossJobCounts) {
    quadrep::SweepRequest req;
    req.claim_ids = {"thm-3.3", "rel-2.1", "lemma-3.1"};
    req.param_ranges = {{"a", {3, 1}}, {"m", {2, 1}}};
    req.ns = quadrep::parse_range("1..25");
    req.jobs = 1;
    const auto serial = quadrep::run_sweep(req);
    req.jobs = 6;
    const auto parallel = quadrep::run_sweep(req);
    ASSERT_EQ(serial.size(), parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i)
        ASSERT_EQ(quadrep::to_json_line(serial[i]), quadrep::to_json_line(parallel[i]));
    EXPECT_TRUE(std::is_sorted(serial.begin(), serial.end(),
                               [](const auto& x, const auto& y) { return x.sort_key() < y.sort_key(); }));
    EXPECT_EQ(serial.front().claim, "lemma-3.1");
}

TEST(Sweep, MissingOrInvalidParametersAreUsageErrors) {
    quadrep::SweepRequest req;
    req.claim_ids = {"rel-2.2"};
    req.param_ranges = {{"a", {1}}, {"m", {0}}};
    req.ns = {1};
    EXPECT_THROW(quadrep::run_sweep(req), quadrep::domain_error);
    req.param_ranges["k"] = {0};
    req.param_ranges["a"] = {2};
    EXPECT_THROW(quadrep::run_sweep(req), quadrep::domain_error);
    req.claim_ids = {"thm-3.1"};
    req.ns = {0};
    EXPECT_THROW(quadrep::run_sweep(req), quadrep::domain_error);
}

TEST(Sweep, FormClaimsDefaultToTheirFamilies) {
    quadrep::SweepRequest req;
    req.claim_ids = {"rel-1.4"};
    req.ns = {0, 1};
    const auto records = quadrep::run_sweep(req);
    EXPECT_EQ(records.size(), 70u);
    EXPECT_EQ(quadrep::summarize(records).failed, 0u);
}

TEST(Cli, CountExamples) {
    EXPECT_EQ(run_cli({"count", "--form", "1,1,1,1", "--n", "1", "--kind", "N"}).out, "8\n");
    EXPECT_EQ(run_cli({"count", "--form", "1,1,2,8", "--n", "1", "--kind", "t"}).out, "32\n");
    EXPECT_EQ(run_cli({"count", "--form", "1,1,1,1", "--n", "0", "--kind", "t"}).out, "16\n");
    EXPECT_EQ(run_cli({"count", "--form", "1,1,1,1", "--n", "2", "--kind", "tprime"}).out, "6\n");
    EXPECT_EQ(run_cli({"count", "--form", "1,1,1,1", "--n", "4", "--kind", "N0"}).out, "16\n");
}

TEST(Cli, CountUsageErrors) {
    EXPECT_EQ(run_cli({"count", "--form", "1,1,1", "--n", "1"}).code, 2);
    EXPECT_EQ(run_cli({"count", "--form", "1,1,1,1", "--n", "-1"}).code, 2);
    EXPECT_EQ(run_cli({"count", "--form", "1,1,1,1", "--n", "1", "--kind", "M"}).code, 2);
    EXPECT_EQ(run_cli({"count", "--form", "1,1,1,1"}).code, 2);
    EXPECT_EQ(run_cli({}).code, 2);
}

TEST(Cli, FormulaExamples) {
    EXPECT_EQ(run_cli({"formula", "--id", "thm-3.1", "--n", "1"}).out, "32\n");
    EXPECT_EQ(run_cli({"formula", "--id", "legendre", "--n", "2"}).out, "96\n");
    const auto guarded = run_cli({"formula", "--id", "rel-2.3", "--a", "1", "--m", "0", "--n", "1"});
    EXPECT_EQ(guarded.code, 0);
    EXPECT_EQ(guarded.out.rfind("skipped", 0), 0u);
    EXPECT_EQ(run_cli({"formula", "--id", "rel-1.3", "--form", "1,1,2,2", "--n", "0"}).out, "1\n");
    EXPECT_EQ(run_cli({"formula", "--id", "rel-2.1", "--a", "1", "--m", "1", "--n", "1"}).out, "32\n");
}

TEST(Cli, FormulaErrors) {
    EXPECT_EQ(run_cli({"formula", "--id", "thm-9.9", "--n", "1"}).code, 2);
    EXPECT_EQ(run_cli({"formula", "--id", "thm-3.1", "--n", "0"}).code, 2);
    EXPECT_EQ(run_cli({"formula", "--id", "rel-1.3", "--n", "0"}).code, 2);
    const auto lemma_guard = run_cli({"formula", "--id", "lemma-3.1", "--n", "2"});
    EXPECT_EQ(lemma_guard.code, 0);
    EXPECT_EQ(lemma_guard.out.rfind("skipped", 0), 0u);
}

TEST(Cli, VerifyExamples) {
    const auto thm = run_cli({"verify", "--id", "thm-3.1", "--n", "1..300"});
    EXPECT_EQ(thm.code, 0);
    EXPECT_EQ(lines_of(thm.out).size(), 300u);
    EXPECT_NE(thm.err.find("total=300 pass=300 fail=0 skipped=0"), std::string::npos);

    const auto rel = run_cli({"verify", "--id", "rel-2.1", "--a", "1,3,5", "--m", "1..3", "--n", "1..100", "--jobs", "4"});
    EXPECT_EQ(rel.code, 0);
    EXPECT_EQ(lines_of(rel.out).size(), 900u);
    EXPECT_NE(rel.err.find("pass=900"), std::string::npos);

    const auto guarded = run_cli({"verify", "--id", "rel-2.4", "--a", "1", "--k", "0", "--m", "0", "--n", "1..10"});
    EXPECT_EQ(guarded.code, 0);
    EXPECT_NE(guarded.err.find("pass=5 fail=0 skipped=5"), std::string::npos);
}

TEST(Cli, VerifyIsByteIdenticalOnRerun) {
    const std::vector<std::string> args{"verify", "--id", "lemma-4.1,thm-4.2,id-4.1", "--n", "1..30", "--jobs", "3"};
    const auto first = run_cli(args);
    const auto second = run_cli(args);
    EXPECT_EQ(first.out, second.out);
    EXPECT_EQ(first.err, second.err);
    EXPECT_EQ(first.code, 0);
}

TEST(Cli, VerifyWritesReportFile) {
    const auto path = std::filesystem::temp_directory_path() / "quadrep_verify_test.jsonl";
    const auto r = run_cli({"verify", "--id", "rel-3.3", "--n", "0..20", "--out", path.string()});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(path);
    std::size_t count = 0;
    for (std::string line; std::getline(in, line); ++count) {
        const auto j = nlohmann::json::parse(line);
        EXPECT_EQ(j["claim"], "rel-3.3");
        EXPECT_TRUE(j["pass"].get<bool>());
    }
    EXPECT_EQ(count, 21u);
    std::filesystem::remove(path);
}

TEST(Cli, VerifyUsageErrors) {
    EXPECT_EQ(run_cli({"verify", "--id", "thm-3.1", "--n", "1..3", "--out", "/nonexistent-dir/x.jsonl"}).code, 2);
    EXPECT_EQ(run_cli({"verify", "--id", "thm-3.1", "--n", "3..1"}).code, 2);
    EXPECT_EQ(run_cli({"verify", "--id", "rel-2.1", "--n", "1..3"}).code, 2);
    EXPECT_EQ(run_cli({"verify", "--id", "nope", "--n", "1..3"}).code, 2);
}

TEST(Cli, SeriesExamples) {
    EXPECT_EQ(run_cli({"series", "--check", "1.8", "--order", "1024"}).out, "pass\n");
    EXPECT_EQ(run_cli({"series", "--check", "1.9", "--k", "3", "--order", "1024"}).out, "pass\n");
    EXPECT_EQ(run_cli({"series", "--check", "1.6", "--order", "0"}).out, "pass\n");
    EXPECT_EQ(run_cli({"series", "--check", "1.7"}).code, 0);
    EXPECT_EQ(run_cli({"series", "--check", "2.0"}).code, 2);
}

TEST(Cli, ListNamesEveryClaim) {
    const auto r = run_cli({"list"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(lines_of(r.out).size(), quadrep::claims().size());
}

}  // namespace
