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


#include "harness/cli.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "approxlcs/approx.hpp"
#include "approxlcs/exact_lcs.hpp"
#include "approxlcs/sampling.hpp"
#include "harness/generators.hpp"
#include "harness/report.hpp"
#include "harness/suites.hpp"

namespace approxlcs::harness {

namespace {

// Instances at or below this length are checked against lcs_dp by default.
constexpr std::size_t kAutoOracleLimit = 2048;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string input_x;
    std::string input_y;
    std::string format = "bytes";
    std::optional<std::uint64_t> time_budget;
    std::optional<std::uint64_t> threshold;
    std::uint64_t seed = 1;
    unsigned whp_constant = 2;
    std::uint64_t abort_multiplier = 64;
    bool strict_linear = false;
    bool median_variant = false;
    bool no_oracle = false;
    bool json = false;
    std::uint64_t trials = 0;
    std::string suite = "lemma-bounds";
    // gen
    std::string generator = "random";
    std::size_t length = 1024;
    std::uint32_t alphabet = 4;
    std::size_t planted = 0;
    std::string output_x;
    std::string output_y;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::vector<std::uint64_t> parse_tokens(const std::string& text, const std::string& path) {
    std::vector<std::uint64_t> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == text.size()) break;
        std::size_t end = pos;
        while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
        std::uint64_t v = 0;
        const auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + end, v);
        if (ec != std::errc() || ptr != text.data() + end) {
            throw UsageError(path + ": not an unsigned decimal token: " + text.substr(pos, end - pos));
        }
        out.push_back(v);
        pos = end;
    }
    return out;
}

RemappedPair load_pair(const Options& o) {
    if (o.input_x.empty() || o.input_y.empty()) {
        throw UsageError("--input-x and --input-y are both required");
    }
    const std::string rx = read_file(o.input_x);
    const std::string ry = read_file(o.input_y);
    if (o.format == "bytes") return remap_alphabet(std::string_view(rx), std::string_view(ry));
    const auto tx = parse_tokens(rx, o.input_x);
    const auto ty = parse_tokens(ry, o.input_y);
    return remap_alphabet(tx, ty);
}

ApproxConfig config_from(const Options& o) {
    ApproxConfig cfg;
    cfg.whp.c = o.whp_constant;
    cfg.abort_multiplier = o.abort_multiplier;
    cfg.strict_linear = o.strict_linear;
    cfg.median_variant = o.median_variant;
    return cfg;
}

Json config_json(const ApproxConfig& cfg) {
    return Json{{"c", cfg.whp.c},
                {"repetition_multiplier", cfg.whp.repetition_multiplier},
                {"abort_multiplier", cfg.abort_multiplier},
                {"strict_linear", cfg.strict_linear},
                {"median_variant", cfg.median_variant}};
}

void emit(std::ostream& out, const Json& j, bool json) {
    if (json) {
        out << dump_json(j) << '\n';
        return;
    }
    for (const auto& [key, value] : j.items()) {
        if (value.is_object()) {
            for (const auto& [sub, v] : value.items()) {
                out << key << '.' << sub << ": " << dump_json(v, -1) << '\n';
            }
        } else {
            out << key << ": " << dump_json(value, -1) << '\n';
        }
    }
}

int cmd_exact(const Options& o, std::ostream& out) {
    const RemappedPair p = load_pair(o);
    const std::size_t L = lcs_length(p.x, p.y);
    if (!o.json) {
        out << L << '\n';
        return kExitOk;
    }
    emit(out, Json{{"command", "exact"},
                   {"n", std::max(p.x.size(), p.y.size())},
                   {"length_x", p.x.size()},
                   {"length_y", p.y.size()},
                   {"exact", L}},
         true);
    return kExitOk;
}

int cmd_approx(const Options& o, std::ostream& out) {
    SymbolString x;
    SymbolString y;
    if (o.input_x.empty() && o.input_y.empty()) {
        RngStream rng(o.seed);
        InstanceSpec spec;
        spec.n = 1024;
        spec.alphabet = 4;
        auto inst = generate_instance(spec, rng);
        x = std::move(inst.x);
        y = std::move(inst.y);
    } else {
        auto p = load_pair(o);
        x = std::move(p.x);
        y = std::move(p.y);
    }
    const std::size_t n = std::max(x.size(), y.size());
    const std::uint64_t T = o.time_budget.value_or(n);
    const ApproxConfig cfg = config_from(o);
    const ApproxResult r = approx_lcs(x, y, T, cfg, o.seed);

    Json j;
    j["command"] = "approx";
    j["n"] = n;
    j["T"] = T;
    j["seed"] = o.seed;
    j["cfg"] = config_json(cfg);
    j["estimate"] = r.estimate;
    j["breakdown"] = Json::object();
    for (const auto& [k, v] : r.breakdown) j["breakdown"][k] = v;
    j["steps"] = r.steps;
    j["aborted"] = r.aborted;
    if (!o.no_oracle && n <= kAutoOracleLimit) {
        TrialRecord rec;
        rec.exact = lcs_length(x, y);
        rec.estimate = r.estimate;
        j["exact"] = *rec.exact;
        const auto ratio = rec.ratio();
        j["ratio"] = ratio ? fixed6(*ratio) : Json(nullptr);
    }
    emit(out, j, o.json);
    return kExitOk;
}

int cmd_decide(const Options& o, std::ostream& out) {
    if (!o.threshold) throw UsageError("decide requires --threshold");
    if (*o.threshold == 0) throw UsageError("--threshold must be at least 1");
    const RemappedPair p = load_pair(o);
    const ApproxConfig cfg = config_from(o);
    RngStream rng(o.seed);
    BudgetMeter meter;
    const HSIndex idx = hs_preprocess(p.y);
    const Decision d = basic_decision(p.x, idx, *o.threshold, cfg.whp, rng, &meter);
    const std::size_t n = std::max(p.x.size(), p.y.size());
    Json j;
    j["command"] = "decide";
    j["n"] = n;
    j["threshold"] = *o.threshold;
    j["seed"] = o.seed;
    j["cfg"] = config_json(cfg);
    j["decision"] = d == Decision::kAtLeast ? "GEQ" : "LT";
    j["steps"] = meter.steps();
    if (!o.no_oracle && n <= kAutoOracleLimit) j["exact"] = lcs_length(p.x, p.y);
    emit(out, j, o.json);
    return kExitOk;
}

int cmd_bench(const Options& o, std::ostream& out) {
    SuiteOptions so;
    so.trials = o.trials;
    so.seed = o.seed;
    so.cfg = config_from(o);
    SuiteReport report;
    try {
        report = run_suite(o.suite, so);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (o.json) {
        out << dump_json(to_json(report)) << '\n';
    } else {
        out << "suite " << report.suite << " seed " << report.seed << ": "
            << (report.passed() ? "PASS" : "FAIL") << '\n';
        out << "  soundness " << report.soundness_violations << " violations / "
            << report.soundness_checked << " checked\n";
        for (const auto& c : report.checks) {
            out << "  " << (c.passed() ? "pass " : "FAIL ") << c.name << ": " << c.hits << '/'
                << c.total << " (required " << c.required << ")";
            if (!c.note.empty()) out << " " << c.note;
            out << '\n';
        }
        for (const auto& [k, v] : report.metrics) out << "  " << k << " = " << v << '\n';
    }
    return report.passed() ? kExitOk : kExitFailure;
}

void write_tokens(std::ostream& os, const SymbolString& s) {
    for (std::size_t i = 0; i < s.size(); ++i) os << (i ? " " : "") << s[i];
    os << '\n';
}

int cmd_gen(const Options& o, std::ostream& out) {
    InstanceSpec spec;
    try {
        spec.kind = parse_generator_kind(o.generator);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    spec.n = o.length;
    spec.alphabet = o.alphabet;
    spec.planted = o.planted;
    RngStream rng(o.seed);
    GeneratedInstance inst;
    try {
        inst = generate_instance(spec, rng);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    auto write = [](const std::string& path, const SymbolString& s) {
        std::ofstream f(path);
        if (!f) throw IoError("cannot write " + path);
        write_tokens(f, s);
    };
    if (!o.output_x.empty()) write(o.output_x, inst.x);
    if (!o.output_y.empty()) write(o.output_y, inst.y);
    if (o.json) {
        Json j;
        j["command"] = "gen";
        j["generator"] = to_string(spec.kind);
        j["n"] = spec.n;
        j["alphabet"] = spec.alphabet;
        j["seed"] = o.seed;
        j["lower_bound"] = inst.lower_bound;
        j["x"] = inst.x.symbols();
        j["y"] = inst.y.symbols();
        out << dump_json(j) << '\n';
    } else if (o.output_x.empty() && o.output_y.empty()) {
        write_tokens(out, inst.x);
        write_tokens(out, inst.y);
    }
    return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Approximate longest common subsequence", "approxlcs"};
    app.require_subcommand(1, 1);
    app.add_option("--input-x", o.input_x, "First input file");
    app.add_option("--input-y", o.input_y, "Second input file");
    app.add_option("--format", o.format, "Input format")->check(CLI::IsMember({"bytes", "tokens"}));
    app.add_option("--time-budget", o.time_budget, "Time budget T, n <= T <= n^2 (default n)");
    app.add_option("--threshold", o.threshold, "Length threshold for decide");
    app.add_option("--seed", o.seed, "Random seed");
    app.add_option("--whp-constant", o.whp_constant, "Failure exponent c")->check(CLI::Range(1u, 64u));
    app.add_option("--abort-multiplier", o.abort_multiplier, "Step budget multiplier")
        ->check(CLI::PositiveNumber);
    app.add_flag("--strict-linear", o.strict_linear, "Pre-subsample both inputs");
    app.add_flag("--median-variant", o.median_variant, "Median combiner for blockwise estimates");
    app.add_flag("--no-oracle", o.no_oracle, "Skip the exact oracle");
    app.add_flag("--json", o.json, "JSON output");
    app.add_option("--trials", o.trials, "Trials for bench (0: suite default)");
    app.add_option("--suite", o.suite, "Suite for bench");
    app.add_option("--generator", o.generator, "gen: random|planted|unary-heavy|diagonal-skew");
    app.add_option("--length", o.length, "gen: string length");
    app.add_option("--alphabet", o.alphabet, "gen: alphabet size");
    app.add_option("--planted", o.planted, "gen: planted subsequence length");
    app.add_option("--output-x", o.output_x, "gen: write x here");
    app.add_option("--output-y", o.output_y, "gen: write y here");

    auto* exact = app.add_subcommand("exact", "Exact LCS length by dynamic programming");
    auto* approx = app.add_subcommand("approx", "Approximate LCS within a time budget");
    auto* decide = app.add_subcommand("decide", "Decide L(x, y) >= threshold");
    auto* bench = app.add_subcommand("bench", "Run a named statistical suite");
    auto* gen = app.add_subcommand("gen", "Generate a synthetic instance");
    for (auto* sub : {exact, approx, decide, bench, gen}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*exact) return cmd_exact(o, out);
        if (*approx) return cmd_approx(o, out);
        if (*decide) return cmd_decide(o, out);
        if (*bench) return cmd_bench(o, out);
        return cmd_gen(o, out);
    } catch (const OracleCapExceeded& e) {
        err << "refused: " << e.what() << '\n';
        return kExitOracleCap;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
}

}  // namespace approxlcs::harness
