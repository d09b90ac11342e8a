// Copyright 2026 The approxlcs Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "approxlcs/exact_lcs.hpp"
#include "harness/cli.hpp"
#include "harness/generators.hpp"
#include "harness/report.hpp"
#include "harness/suites.hpp"

namespace approxlcs::harness {
namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun cli(std::vector<std::string> args) {
    args.insert(args.begin(), "approxlcs");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

class TempDir {
public:
    TempDir() {
        path_ = std::filesystem::temp_directory_path() /
                ("approxlcs-test-" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                 "-" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
        std::filesystem::create_directories(path_);
    }
    ~TempDir() { std::filesystem::remove_all(path_); }
    std::string write(const std::string& name, const std::string& body) const {
        const auto p = path_ / name;
        std::ofstream(p, std::ios::binary) << body;
        return p.string();
    }
    std::string file(const std::string& name) const { return (path_ / name).string(); }

private:
    std::filesystem::path path_;
};

TEST(Generators, PlantedFullLengthIsIdentity) {
    RngStream rng(1);
    InstanceSpec spec;
    spec.kind = GeneratorKind::kPlanted;
    spec.n = 300;
    spec.alphabet = 5;
    spec.planted = 300;
    const auto inst = generate_instance(spec, rng);
    EXPECT_EQ(inst.x.symbols(), inst.y.symbols());
    EXPECT_EQ(inst.lower_bound, 300u);
}

TEST(Generators, PlantedZeroIsDisjoint) {
    RngStream rng(2);
    InstanceSpec spec;
    spec.kind = GeneratorKind::kPlanted;
    spec.n = 200;
    spec.alphabet = 8;
    spec.planted = 0;
    const auto inst = generate_instance(spec, rng);
    EXPECT_EQ(lcs_length(inst.x, inst.y), 0u);
}

TEST(Generators, LowerBoundHolds) {
    RngStream rng(3);
    for (auto kind : {GeneratorKind::kRandom, GeneratorKind::kPlanted, GeneratorKind::kUnaryHeavy,
                      GeneratorKind::kDiagonalSkew}) {
        InstanceSpec spec;
        spec.kind = kind;
        spec.n = 1024;
        spec.alphabet = 4;
        spec.planted = 512;
        const auto inst = generate_instance(spec, rng);
        EXPECT_EQ(inst.x.size(), 1024u);
        EXPECT_EQ(inst.y.size(), 1024u);
        EXPECT_GE(lcs_length(inst.x, inst.y), inst.lower_bound) << to_string(kind);
        EXPECT_EQ(parse_generator_kind(to_string(kind)), kind);
    }
    EXPECT_THROW(parse_generator_kind("nope"), std::invalid_argument);
}

TEST(Report, FixedSixDecimals) {
    Json j;
    j["ratio"] = fixed6(1.0 / 3.0);
    j["one"] = fixed6(2.0);
    j["n"] = 17;
    EXPECT_EQ(dump_json(j, -1), R"({"ratio":0.333333,"one":2.000000,"n":17})");
    EXPECT_TRUE(fixed6(std::numeric_limits<double>::infinity()).is_null());
}

TEST(Report, TrialRatio) {
    TrialRecord r;
    EXPECT_FALSE(r.ratio().has_value());
    r.exact = 0;
    EXPECT_DOUBLE_EQ(*r.ratio(), 1.0);
    r.exact = 10;
    EXPECT_FALSE(r.ratio().has_value());
    r.estimate = 4;
    EXPECT_DOUBLE_EQ(*r.ratio(), 2.5);
}

TEST(Report, CheckThreshold) {
    Check c{"x", 0, 0, 0.99, ""};
    EXPECT_FALSE(c.passed());
    for (int i = 0; i < 99; ++i) c.record(true);
    c.record(false);
    EXPECT_TRUE(c.passed());
    c.record(false);
    EXPECT_FALSE(c.passed());
}

TEST(Report, SoundnessTallyFailsReport) {
    SuiteReport r;
    r.check("ok").record(true);
    EXPECT_TRUE(r.sound(3, 3));
    EXPECT_TRUE(r.passed());
    EXPECT_FALSE(r.sound(4, 3));
    EXPECT_FALSE(r.passed());
    EXPECT_EQ(r.soundness_checked, 2u);
    EXPECT_EQ(r.soundness_violations, 1u);
}

TEST(Report, MedianOfEvenAndOdd) {
    EXPECT_DOUBLE_EQ(median({3, 1, 2}), 2.0);
    EXPECT_DOUBLE_EQ(median({4, 1, 2, 3}), 2.5);
}

TEST(Suites, UnknownNameThrows) {
    EXPECT_THROW(run_suite("nope", SuiteOptions{}), std::invalid_argument);
    EXPECT_FALSE(suite_names().empty());
}

TEST(Suites, SmallRunsPass) {
    SuiteOptions o;
    o.trials = 20;
    for (const char* name : {"hs-vs-dp", "block-dp", "structural", "soundness"}) {
        const auto r = run_suite(name, o);
        EXPECT_TRUE(r.passed()) << name << "\n" << dump_json(to_json(r, false));
        EXPECT_EQ(r.soundness_violations, 0u) << name;
    }
}

TEST(Suites, Deterministic) {
    SuiteOptions o;
    o.trials = 10;
    o.seed = 42;
    EXPECT_EQ(dump_json(to_json(run_suite("soundness", o))), dump_json(to_json(run_suite("soundness", o))));
}

TEST(Cli, ExactBytesAndTokens) {
    TempDir d;
    const auto x = d.write("x", "abcbdab");
    const auto y = d.write("y", "bdcaba");
    auto r = cli({"exact", "--input-x", x, "--input-y", y});
    EXPECT_EQ(r.code, kExitOk) << r.err;
    EXPECT_EQ(r.out, "4\n");

    const auto tx = d.write("tx", "10 20 30 40\n");
    const auto ty = d.write("ty", "20 40 99");
    r = cli({"exact", "--input-x", tx, "--input-y", ty, "--format", "tokens", "--json"});
    EXPECT_EQ(r.code, kExitOk) << r.err;
    const auto j = Json::parse(r.out);
    EXPECT_EQ(j["exact"], 2);
    EXPECT_EQ(j["n"], 4);
}

TEST(Cli, BadTokenIsUsageError) {
    TempDir d;
    const auto x = d.write("x", "1 2 -3");
    EXPECT_EQ(cli({"exact", "--input-x", x, "--input-y", x, "--format", "tokens"}).code, kExitUsage);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(cli({}).code, kExitUsage);
    EXPECT_EQ(cli({"frobnicate"}).code, kExitUsage);
    EXPECT_EQ(cli({"exact"}).code, kExitUsage);
    EXPECT_EQ(cli({"approx", "--format", "utf9"}).code, kExitUsage);
    EXPECT_EQ(cli({"approx", "--time-budget", "1"}).code, kExitUsage);
    EXPECT_EQ(cli({"approx", "--seed", "banana"}).code, kExitUsage);
    EXPECT_EQ(cli({"bench", "--suite", "nope"}).code, kExitUsage);
    EXPECT_EQ(cli({"gen", "--generator", "nope"}).code, kExitUsage);
}

TEST(Cli, DecideNeedsThreshold) {
    TempDir d;
    const auto x = d.write("x", "abcbdab");
    EXPECT_EQ(cli({"decide", "--input-x", x, "--input-y", x}).code, kExitUsage);
    auto r = cli({"decide", "--input-x", x, "--input-y", x, "--threshold", "7", "--json"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    EXPECT_EQ(Json::parse(r.out)["decision"], "GEQ");
    r = cli({"decide", "--input-x", x, "--input-y", x, "--threshold", "8", "--json"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    EXPECT_EQ(Json::parse(r.out)["decision"], "LT");
}

TEST(Cli, OracleCapRefusal) {
    TempDir d;
    const std::string big(9000, 'a');
    const auto x = d.write("x", big);
    const auto r = cli({"exact", "--input-x", x, "--input-y", x});
    EXPECT_EQ(r.code, kExitOracleCap);
    EXPECT_FALSE(r.err.empty());
}

TEST(Cli, ApproxJsonIsStable) {
    const auto a = cli({"approx", "--time-budget", "4096", "--seed", "7", "--json"});
    const auto b = cli({"approx", "--time-budget", "4096", "--seed", "7", "--json"});
    ASSERT_EQ(a.code, kExitOk) << a.err;
    EXPECT_EQ(a.out, b.out);
    const auto j = Json::parse(a.out);
    EXPECT_EQ(j["n"], 1024);
    EXPECT_EQ(j["T"], 4096);
    EXPECT_EQ(j["seed"], 7);
    EXPECT_EQ(j["cfg"]["c"], 2);
    EXPECT_TRUE(j.contains("breakdown"));
    EXPECT_TRUE(j.contains("steps"));
    EXPECT_LE(j["estimate"].get<std::uint64_t>(), j["exact"].get<std::uint64_t>());
    // six decimals after the point
    const auto pos = a.out.find("\"ratio\": ");
    ASSERT_NE(pos, std::string::npos);
    const auto value = a.out.substr(pos + 9, a.out.find_first_of(",\n}", pos) - pos - 9);
    EXPECT_EQ(value.size() - value.find('.') - 1, 6u) << value;
}

TEST(Cli, ApproxNoOracle) {
    const auto r = cli({"approx", "--seed", "3", "--no-oracle", "--json"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const auto j = Json::parse(r.out);
    EXPECT_FALSE(j.contains("exact"));
    EXPECT_FALSE(j.contains("ratio"));
}

TEST(Cli, ApproxTextMode) {
    const auto r = cli({"approx", "--seed", "3", "--whp-constant", "1"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    EXPECT_NE(r.out.find("cfg.c: 1\n"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("estimate: "), std::string::npos);
}

TEST(Cli, GenRoundTrip) {
    TempDir d;
    const auto x = d.file("x");
    const auto y = d.file("y");
    auto r = cli({"gen", "--generator", "planted", "--length", "256", "--alphabet", "6", "--planted", "100",
                  "--seed", "5", "--output-x", x, "--output-y", y});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    r = cli({"exact", "--input-x", x, "--input-y", y, "--format", "tokens"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    EXPECT_GE(std::stoul(r.out), 100u);
}

TEST(Cli, BenchReportsJson) {
    const auto r = cli({"bench", "--suite", "block-dp", "--trials", "5", "--json"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const auto j = Json::parse(r.out);
    EXPECT_EQ(j["suite"], "block-dp");
}

}  // namespace
}  // namespace approxlcs::harness
