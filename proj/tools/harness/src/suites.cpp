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


#include "harness/suites.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "approxlcs/blocks.hpp"
#include "approxlcs/exact_lcs.hpp"
#include "approxlcs/matching_pairs.hpp"
#include "approxlcs/sampling.hpp"
#include "harness/generators.hpp"

namespace approxlcs::harness {

namespace {

using Clock = std::chrono::steady_clock;
using u128 = unsigned __int128;

constexpr std::array<std::uint32_t, 4> kAlphabets = {2, 4, 16, 256};

// Stream for trial `trial` of the suite tagged `tag`.
RngStream trial_rng(std::uint64_t seed, std::uint64_t tag, std::uint64_t trial) {
    return RngStream(seed).split(tag).split(trial);
}

SuiteReport new_report(std::string name, std::uint64_t seed, std::uint64_t trials) {
    SuiteReport r;
    r.suite = std::move(name);
    r.seed = seed;
    r.trials = trials;
    return r;
}

std::uint64_t pick(std::uint64_t requested, std::uint64_t fallback) {
    return requested == 0 ? fallback : requested;
}

std::vector<SymbolView> cut(SymbolView s, std::size_t m, std::size_t k) {
    std::vector<SymbolView> out;
    out.reserve(k);
    for (std::size_t b = 0; b < k; ++b) {
        const std::size_t begin = std::min(s.size(), b * m);
        const std::size_t end = std::min(s.size(), begin + m);
        out.push_back(s.subspan(begin, end - begin));
    }
    return out;
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

std::uint64_t floor_pow2(std::uint64_t v) {
    return v == 0 ? 1 : std::uint64_t{1} << (std::bit_width(v) - 1);
}

void timed(SuiteReport& report, Clock::time_point start) {
    report.seconds = std::chrono::duration<double>(Clock::now() - start).count();
}

void merge(SuiteReport& into, const SuiteReport& part) {
    for (const auto& c : part.checks) {
        Check copy = c;
        copy.name = part.suite + "/" + c.name;
        into.checks.push_back(std::move(copy));
    }
    for (const auto& [k, v] : part.metrics) into.metrics[part.suite + "/" + k] = v;
    into.soundness_checked += part.soundness_checked;
    into.soundness_violations += part.soundness_violations;
}

// Maximum total of `values` (row-major k x k) over all block sequences.
std::uint64_t enumerate_block_sequences(const std::vector<std::uint64_t>& values, std::size_t k) {
    std::uint64_t best = 0;
    std::function<void(std::size_t, std::size_t, std::uint64_t)> walk =
        [&](std::size_t i0, std::size_t j0, std::uint64_t sum) {
            best = std::max(best, sum);
            for (std::size_t i = i0; i < k; ++i) {
                for (std::size_t j = j0; j < k; ++j) {
                    walk(i + 1, j + 1, sum + values[i * k + j]);
                }
            }
        };
    walk(0, 0, 0);
    return best;
}

// Compares every block DP variant against enumeration on one matrix.
bool block_dp_agrees(const std::vector<std::uint64_t>& values, std::size_t k) {
    const std::uint64_t truth = enumerate_block_sequences(values, k);
    std::vector<BlockEstimates::Entry> entries;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            entries.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j),
                               values[i * k + j]});
        }
    }
    const BlockEstimates est(k, std::move(entries));
    if (block_sequence_dp(values, k) != truth) return false;
    if (block_sequence_dp(est, k) != truth) return false;
    if (sparse_block_sequence_dp(est) != truth) return false;
    const auto [value, path] = block_sequence_dp_path(est, k);
    if (value != truth) return false;
    std::uint64_t sum = 0;
    for (std::size_t t = 0; t < path.size(); ++t) {
        if (path[t].first >= k || path[t].second >= k) return false;
        if (t > 0 && (path[t].first <= path[t - 1].first || path[t].second <= path[t - 1].second)) {
            return false;
        }
        sum += values[path[t].first * k + path[t].second];
    }
    return sum == truth;
}

InstanceSpec mixed_spec(std::uint64_t trial, std::size_t n, RngStream& rng) {
    InstanceSpec spec;
    spec.n = n;
    spec.alphabet = kAlphabets[trial % kAlphabets.size()];
    switch ((trial / kAlphabets.size()) % 4) {
        case 0:
            spec.kind = GeneratorKind::kRandom;
            break;
        case 1:
            spec.kind = GeneratorKind::kPlanted;
            spec.planted = static_cast<std::size_t>(rng.uniform_int(1, n));
            break;
        case 2:
            spec.kind = GeneratorKind::kUnaryHeavy;
            break;
        default:
            spec.kind = GeneratorKind::kDiagonalSkew;
            spec.mutation = 0.05 + 0.9 * rng.uniform01();
            break;
    }
    return spec;
}

std::uint64_t isqrt_floor(std::uint64_t v) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(v)));
    while (r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

// T in {n, floor(n^1.5), n^2}.
std::array<std::uint64_t, 3> budgets_for(std::size_t n) {
    const std::uint64_t nn = n;
    return {nn, nn * isqrt_floor(nn), nn * nn};
}

}  // namespace

SuiteReport suite_hs_vs_dp(std::uint64_t trials, std::uint64_t seed) {
    const auto start = Clock::now();
    trials = pick(trials, 1000);
    SuiteReport report = new_report("hs-vs-dp", seed, trials);

    std::vector<std::vector<Symbol>> binary;
    for (std::size_t len = 0; len <= 8; ++len) {
        for (std::uint32_t bits = 0; bits < (1u << len); ++bits) {
            std::vector<Symbol> s(len);
            for (std::size_t t = 0; t < len; ++t) s[t] = (bits >> t) & 1u;
            binary.push_back(std::move(s));
        }
    }
    Check& exhaustive = report.check("exhaustive-binary");
    for (const auto& y : binary) {
        const HSIndex idx = hs_preprocess(y);
        for (const auto& x : binary) {
            exhaustive.record(hs_query(x, idx) == lcs_length(x, y));
        }
    }

    Check& random = report.check("random-pairs");
    Check& certificate = report.check("certificate");
    for (std::uint64_t t = 0; t < trials; ++t) {
        RngStream rng = trial_rng(seed, 1, t);
        const std::uint32_t a = kAlphabets[t % kAlphabets.size()];
        const auto nx = static_cast<std::size_t>(rng.uniform_int(0, 512));
        const auto ny = static_cast<std::size_t>(rng.uniform_int(0, 512));
        const SymbolString x = random_string(nx, a, rng);
        const SymbolString y = random_string(ny, a, rng);
        const DpResult dp = lcs_dp(x, y, true);
        random.record(hs_query(x, hs_preprocess(y)) == dp.length);
        certificate.record(dp.certificate && dp.certificate->size() == dp.length &&
                           validate_certificate(x, y, *dp.certificate));
    }
    timed(report, start);
    return report;
}

SuiteReport suite_decision_soundness(std::uint64_t trials, std::uint64_t seed, const WhpConfig& whp) {
    const auto start = Clock::now();
    trials = pick(trials, 1000);
    SuiteReport report = new_report("decision-soundness", seed, trials);
    Check& at_l = report.check("geq-at-L", 0.99);
    Check& above = report.check("lt-at-L+1", 0.99);
    constexpr std::size_t n = 512;
    for (std::uint64_t t = 0; t < trials; ++t) {
        RngStream rng = trial_rng(seed, 2, t);
        const std::uint32_t a = kAlphabets[t % kAlphabets.size()];
        const SymbolString x = random_string(n, a, rng);
        const SymbolString y = random_string(n, a, rng);
        const std::size_t L = lcs_length(x, y);
        const HSIndex idx = hs_preprocess(y);
        auto decide = [&](std::size_t ell) {
            const Decision d = basic_decision(x, idx, ell, whp, rng);
            if (d == Decision::kAtLeast) report.sound(ell, L);
            else ++report.soundness_checked;
            return d;
        };
        if (L >= 1) at_l.record(decide(L) == Decision::kAtLeast);
        above.record(decide(L + 1) == Decision::kLess);
        decide(static_cast<std::size_t>(rng.uniform_int(1, n)));
    }
    timed(report, start);
    return report;
}

SuiteReport suite_basic_approx(std::uint64_t trials, std::uint64_t seed, const WhpConfig& whp) {
    const auto start = Clock::now();
    trials = pick(trials, 1000);
    SuiteReport report = new_report("basic-approx", seed, trials);
    constexpr std::size_t n = 1024;

    for (const double beta : {2.0, 8.0, 32.0, 256.0}) {
        Check& c = report.check("beta=" + fmt(beta), 0.99);
        std::uint64_t exact_path = 0;
        for (std::uint64_t t = 0; t < trials; ++t) {
            RngStream rng = trial_rng(seed, 3 + static_cast<std::uint64_t>(beta), t);
            const SymbolString x = random_string(n, 4, rng);
            const HSIndex idx = hs_preprocess(x);
            const BasicApprox r = basic_approx_query(x, idx, beta, whp, rng);
            report.sound(r.length, n);
            if (r.exact) ++exact_path;
            c.record(static_cast<double>(r.length) > static_cast<double>(n) / beta - 1.0);
        }
        c.note = "exact path in " + std::to_string(exact_path) + " of " + std::to_string(trials);
    }

    Check& gen = report.check("generalized-beta=16", 0.99);
    for (std::uint64_t t = 0; t < trials; ++t) {
        RngStream rng = trial_rng(seed, 40, t);
        const SymbolString x = random_string(n, 4, rng);
        const std::size_t r = generalized_basic_approx(x, x, 16.0, whp, rng);
        report.sound(r, n);
        gen.record(r * 16 >= n);
    }

    // Kept-length statistics of the geometric-skip sampler.
    Check& mean = report.check("subsample-mean-3sigma");
    {
        constexpr std::size_t len = 10000;
        constexpr double p = 0.1;
        RngStream rng = trial_rng(seed, 41, 0);
        const SymbolString x = random_string(len, 4, rng);
        double total = 0.0;
        bool subsequence = true;
        for (std::uint64_t t = 0; t < trials; ++t) {
            const auto kept = subsample(x, p, rng);
            subsequence = subsequence && is_subsequence(kept, x);
            total += static_cast<double>(kept.size());
        }
        const double avg = total / static_cast<double>(trials);
        const double sigma = std::sqrt(len * p * (1 - p) / static_cast<double>(trials));
        mean.record(subsequence && std::abs(avg - len * p) <= 3 * sigma);
        mean.note = "mean " + fmt(avg) + ", sigma " + fmt(sigma);
    }
    timed(report, start);
    return report;
}

SuiteReport suite_matching_pairs(std::uint64_t trials, std::uint64_t seed, const WhpConfig& whp) {
    const auto start = Clock::now();
    trials = pick(trials, 100);
    SuiteReport report = new_report("matching-pairs", seed, trials);
    constexpr std::size_t k = 8;
    constexpr std::size_t m = 64;
    Check& sampled = report.check("sampled-bounds", 0.99);
    Check& deterministic = report.check("deterministic-q<=8");
    double vacuous = 0.0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        RngStream rng = trial_rng(seed, 50, t);
        const SymbolString x = random_string(k * m, 16, rng);
        const SymbolString y = random_string(k * m, 16, rng);
        const auto bx = cut(x, m, k);
        const auto by = cut(y, m, k);
        std::vector<std::uint64_t> exact(k * k);
        std::uint64_t M = 0;
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < k; ++j) {
                exact[i * k + j] = count_matching_pairs(bx[i], by[j]);
                M += exact[i * k + j];
            }
        }
        const double q = static_cast<double>(M) / 64.0;
        const auto est = estimate_block_matching_pairs(bx, by, q, whp, rng);
        bool all = true;
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < k; ++j) {
                const double mij = static_cast<double>(exact[i * k + j]);
                const double v = est.at(i, j);
                if (mij / 8.0 - q <= 0.0) vacuous += 1.0;
                all = all && (mij / 8.0 - q <= v) && (v <= 4.0 * mij);
            }
        }
        sampled.record(all);

        const auto det = estimate_block_matching_pairs(bx, by, 8.0, whp, rng);
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < k; ++j) {
                const double mij = static_cast<double>(exact[i * k + j]);
                const double v = det.at(i, j);
                deterministic.record(v >= mij / 4.0 && v <= mij);
            }
        }
    }
    report.metrics["vacuous-lower-bound-fraction"] = vacuous / static_cast<double>(trials * k * k);
    timed(report, start);
    return report;
}

SuiteReport suite_single_symbol(std::uint64_t trials, std::uint64_t seed, const WhpConfig& whp) {
    const auto start = Clock::now();
    trials = pick(trials, 1000);
    SuiteReport report = new_report("single-symbol", seed, trials);
    Check& lower = report.check("k>=M/(2n)");
    Check& upper = report.check("k<=L");
    for (std::uint64_t t = 0; t < trials; ++t) {
        RngStream rng = trial_rng(seed, 60, t);
        const auto n = static_cast<std::size_t>(rng.uniform_int(1, 1024));
        const auto inst = generate_instance(mixed_spec(t, n, rng), rng);
        const SingleSymbol s = single_symbol_lcs(inst.x, inst.y);
        const std::uint64_t M = count_matching_pairs(inst.x, inst.y);
        const std::size_t L = lcs_length(inst.x, inst.y);
        lower.record(2 * static_cast<u128>(n) * s.length >= M);
        upper.record(s.length <= L);
        report.sound(s.length, L);
    }

    constexpr std::size_t k = 8;
    constexpr std::size_t m = 64;
    const std::uint64_t grids = std::max<std::uint64_t>(1, trials / 10);
    Check& blockwise = report.check("blockwise-lower", 0.99);
    Check& block_upper = report.check("blockwise<=L_ij");
    for (std::uint64_t t = 0; t < grids; ++t) {
        RngStream rng = trial_rng(seed, 61, t);
        const std::uint32_t a = t % 2 == 0 ? 4 : 16;
        const SymbolString x = random_string(k * m, a, rng);
        const SymbolString y = random_string(k * m, a, rng);
        const auto bx = cut(x, m, k);
        const auto by = cut(y, m, k);
        const double q = static_cast<double>(count_matching_pairs(x, y)) / 64.0;
        WhpConfig local = whp;
        local.problem_size = k * m;
        const auto est = blockwise_single_symbol(bx, by, q, local, rng);
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < k; ++j) {
                const std::uint64_t v = est.at(i, j);
                const std::size_t lij = lcs_length(bx[i], by[j]);
                const double mij = static_cast<double>(count_matching_pairs(bx[i], by[j]));
                block_upper.record(v <= lij);
                report.sound(v, lij);
                blockwise.record(static_cast<double>(v) >= (mij - q) / (16.0 * m));
            }
        }
    }
    timed(report, start);
    return report;
}

SuiteReport suite_block_dp(std::uint64_t trials, std::uint64_t seed) {
    const auto start = Clock::now();
    trials = pick(trials, 100000);
    SuiteReport report = new_report("block-dp", seed, trials);
    Check& exhaustive = report.check("exhaustive-k<=3");
    for (std::size_t k = 1; k <= 3; ++k) {
        const std::size_t cells = k * k;
        std::vector<std::uint64_t> values(cells, 0);
        for (std::uint64_t code = 0; code < (std::uint64_t{1} << (2 * cells)); ++code) {
            for (std::size_t c = 0; c < cells; ++c) values[c] = (code >> (2 * c)) & 3u;
            exhaustive.record(block_dp_agrees(values, k));
        }
    }
    Check& sampled = report.check("sampled-k=4");
    RngStream rng = trial_rng(seed, 70, 0);
    std::vector<std::uint64_t> values(16);
    for (std::uint64_t t = 0; t < trials; ++t) {
        for (auto& v : values) v = rng.uniform_int(0, 3);
        sampled.record(block_dp_agrees(values, 4));
    }
    timed(report, start);
    return report;
}

SuiteReport suite_structural(std::uint64_t trials, std::uint64_t seed) {
    const auto start = Clock::now();
    trials = pick(trials, 500);
    SuiteReport report = new_report("structural", seed, trials);
    Check& eq1 = report.check("M<2*mu*sqrt(T)");
    Check& align = report.check("alignment>=L^2/(64n)");
    std::uint64_t zero_m = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        RngStream rng = trial_rng(seed, 80, t);
        const auto n = static_cast<std::size_t>(rng.uniform_int(16, 1024));
        const auto inst = generate_instance(mixed_spec(t, n, rng), rng);
        const std::uint64_t M = count_matching_pairs(inst.x, inst.y);
        const std::uint64_t L = lcs_length(inst.x, inst.y);
        if (M == 0) ++zero_m;
        for (const std::uint64_t T : budgets_for(n)) {
            const BlockGrid grid = split_blocks(inst.x, inst.y, T);
            const std::uint64_t mu = oracle_mu(grid);
            // M < 2 mu sqrt(T)  <=>  M^2 < 4 mu^2 T
            if (M > 0) eq1.record(static_cast<u128>(M) * M < 4 * static_cast<u128>(mu) * mu * T);
            const std::uint64_t aligned = sparse_block_sequence_dp(oracle_block_lcs(grid));
            align.record(64 * static_cast<u128>(n) * aligned >= static_cast<u128>(L) * L);
            report.sound(aligned, L);
        }
    }
    eq1.note = std::to_string(zero_m) + " instances with M = 0 skipped";
    timed(report, start);
    return report;
}

SuiteReport suite_algorithm_bounds(std::uint64_t trials, std::uint64_t seed, const ApproxConfig& cfg) {
    const auto start = Clock::now();
    trials = pick(trials, 100);
    SuiteReport report = new_report("algorithm-bounds", seed, trials);

    // Algorithm 1: x = y over two symbols, T = n.
    {
        constexpr std::size_t n = 1024;
        Check& c = report.check("algorithm1>=sqrt(LT/n)", 0.99);
        for (std::uint64_t t = 0; t < 2 * trials; ++t) {
            RngStream rng = trial_rng(seed, 90, t);
            const SymbolString x = random_string(n, 2, rng);
            const std::uint64_t v = algorithm1(x, x, n, cfg, rng);
            report.sound(v, n);
            c.record(v * v >= n);  // L T / n = n
        }
    }
    // Algorithm 2: unary-heavy, T = n^1.5.
    {
        constexpr std::size_t n = 4096;
        const std::uint64_t T = budgets_for(n)[1];
        Check& c = report.check("algorithm2>=mu*sqrt(T)/(32n)", 0.99);
        for (std::uint64_t t = 0; t < trials; ++t) {
            RngStream rng = trial_rng(seed, 91, t);
            InstanceSpec spec;
            spec.kind = GeneratorKind::kUnaryHeavy;
            spec.n = n;
            spec.alphabet = 4;
            const auto inst = generate_instance(spec, rng);
            const std::uint64_t mu = oracle_mu(split_blocks(inst.x, inst.y, T));
            const std::uint64_t v = algorithm2(inst.x, inst.y, T, cfg, rng);
            report.sound(v, hs_query(inst.x, hs_preprocess(inst.y)));
            const u128 lhs = static_cast<u128>(32 * n) * v;
            c.record(lhs * lhs >= static_cast<u128>(mu) * mu * T);
        }
    }
    // Algorithm 3: x = y, T = n, guesses rounded down to powers of two.
    {
        constexpr std::size_t n = 4096;
        const double lg = std::log2(static_cast<double>(n));
        Check& c = report.check("algorithm3>=lambda/(sqrt(T)log^3n)", 0.95);
        for (std::uint64_t t = 0; t < trials; ++t) {
            RngStream rng = trial_rng(seed, 92, t);
            const SymbolString x = random_string(n, 4, rng);
            const BlockGrid grid = split_blocks(x, x, n);
            const GuessTriple g{n, floor_pow2(oracle_lambda(grid)), floor_pow2(oracle_mu(grid))};
            const std::uint64_t lambda = oracle_lambda(grid);
            const std::uint64_t v = algorithm3(x, x, n, g, cfg, rng);
            report.sound(v, n);
            c.record(static_cast<double>(v) >=
                     static_cast<double>(lambda) / (std::sqrt(static_cast<double>(n)) * lg * lg * lg));
        }
    }
    // Algorithm 4: planted common subsequence of length n/2, T = n. The
    // reference value is the sampled-block count times the per-block credit,
    // p * |G| * L^ / (8 sqrt(T)) with |G| = L sqrt(T) / (8n).
    {
        constexpr std::size_t n = 4096;
        Check& c = report.check("algorithm4>=p*L*L^/(64n)", 0.95);
        std::vector<double> shortfall;
        for (std::uint64_t t = 0; t < trials; ++t) {
            RngStream rng = trial_rng(seed, 93, t);
            InstanceSpec spec;
            spec.kind = GeneratorKind::kPlanted;
            spec.n = n;
            spec.alphabet = 16;
            spec.planted = n / 2;
            const auto inst = generate_instance(spec, rng);
            const std::uint64_t L = lcs_length(inst.x, inst.y);
            const BlockGrid grid = split_blocks(inst.x, inst.y, n);
            const GuessTriple g{floor_pow2(L), floor_pow2(oracle_lambda(grid)),
                                floor_pow2(oracle_mu(grid))};
            const double Lh = static_cast<double>(g.L);
            const double T = static_cast<double>(n);
            const double p = std::min({1.0, Lh / n, Lh * T / (static_cast<double>(g.lambda) * n),
                                       Lh * Lh * T / (static_cast<double>(g.lambda) *
                                                      static_cast<double>(g.mu) * n)});
            const double bound = p * static_cast<double>(L) * Lh / (64.0 * n);
            const std::uint64_t v = algorithm4(inst.x, inst.y, n, g, cfg, rng);
            report.sound(v, L);
            c.record(static_cast<double>(v) >= bound);
            shortfall.push_back(static_cast<double>(v) - bound);
        }
        report.metrics["algorithm4-median-margin"] = median(shortfall);
    }
    timed(report, start);
    return report;
}

SuiteReport suite_end_to_end(std::uint64_t trials, std::uint64_t seed, const ApproxConfig& cfg) {
    const auto start = Clock::now();
    trials = pick(trials, 100);
    SuiteReport report = new_report("end-to-end", seed, trials);
    constexpr std::size_t n = 2048;
    const double limit = std::pow(static_cast<double>(n), 0.45);
    Check& nonzero = report.check("estimate>=1-when-M>=1");
    std::uint64_t index = 0;
    for (const std::uint32_t a : {4u, 16u, 256u}) {
        const std::string family = "random-a" + std::to_string(a);
        Check& ratio_check = report.check("median-ratio<=n^0.45/" + family);
        std::vector<double> ratios;
        for (std::uint64_t t = 0; t < trials; ++t) {
            RngStream rng = trial_rng(seed, 100 + a, t);
            const SymbolString x = random_string(n, a, rng);
            const SymbolString y = random_string(n, a, rng);
            const std::uint64_t L = lcs_length(x, y);
            const std::uint64_t M = count_matching_pairs(x, y);
            const ApproxResult r = approx_lcs(x, y, n, cfg, rng.next_u64());
            report.sound(r.estimate, L);
            if (M >= 1) nonzero.record(r.estimate >= 1);
            TrialRecord rec{index++, family, n, n, L, r.estimate, r.steps, r.breakdown};
            const auto q = rec.ratio();
            ratios.push_back(q ? *q : std::numeric_limits<double>::infinity());
            report.records.push_back(std::move(rec));
        }
        const double med = median(ratios);
        ratio_check.record(med <= limit);
        ratio_check.note = "median " + fmt(med) + ", limit " + fmt(limit);
        report.metrics["median-ratio/" + family] = med;
    }
    timed(report, start);
    return report;
}

SuiteReport suite_budget(std::uint64_t trials, std::uint64_t seed, const ApproxConfig& cfg) {
    const auto start = Clock::now();
    trials = pick(trials, 1);
    SuiteReport report = new_report("budget", seed, trials);
    std::vector<double> xs;
    std::vector<double> ys;
    std::uint64_t index = 0;
    for (unsigned e = 10; e <= 14; ++e) {
        const std::size_t n = std::size_t{1} << e;
        for (std::uint64_t t = 0; t < trials; ++t) {
            RngStream rng = trial_rng(seed, 110 + e, t);
            const SymbolString x = random_string(n, 16, rng);
            const SymbolString y = random_string(n, 16, rng);
            const ApproxResult r = approx_lcs(x, y, n, cfg, rng.next_u64());
            const std::uint64_t L = hs_query(x, hs_preprocess(y));
            report.sound(r.estimate, L);
            const double lg = std::log2(static_cast<double>(n));
            xs.push_back(std::log(static_cast<double>(n) * lg * lg * lg * lg));
            ys.push_back(std::log(static_cast<double>(std::max<std::uint64_t>(1, r.steps))));
            report.records.push_back({index++, "random-a16", n, n, L, r.estimate, r.steps, r.breakdown});
        }
    }
    // Least-squares slope of log(steps) against log(T log^4 n).
    const double count = static_cast<double>(xs.size());
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= count;
    my /= count;
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxy += (xs[i] - mx) * (ys[i] - my);
        sxx += (xs[i] - mx) * (xs[i] - mx);
    }
    const double slope = sxx > 0 ? sxy / sxx : 0.0;
    report.metrics["fit-exponent"] = slope;
    Check& c = report.check("fit-exponent<=1.15");
    c.record(slope <= 1.15);
    c.note = "exponent " + fmt(slope);
    timed(report, start);
    return report;
}

SuiteReport suite_soundness(std::uint64_t trials, std::uint64_t seed, const ApproxConfig& cfg) {
    const auto start = Clock::now();
    trials = pick(trials, 2000);
    SuiteReport report = new_report("soundness", seed, trials);
    for (std::uint64_t t = 0; t < trials; ++t) {
        RngStream rng = trial_rng(seed, 120, t);
        const auto n = static_cast<std::size_t>(rng.uniform_int(1, 128));
        const auto inst = generate_instance(mixed_spec(t, n, rng), rng);
        const SymbolView x = inst.x;
        const SymbolView y = inst.y;
        const std::uint64_t L = lcs_length(x, y);
        // Every fourth trial runs the literal (unshared) paths, at small T.
        const bool literal = t % 4 == 1;
        const std::uint64_t T = rng.uniform_int(
            n, std::min<std::uint64_t>(static_cast<std::uint64_t>(n) * n, (literal ? 2 : 8) * n));

        ApproxConfig c = cfg;
        c.exact_shortcuts = !literal;
        c.median_variant = t % 3 == 0;
        c.strict_linear = t % 5 == 0;
        report.sound(approx_lcs(x, y, T, c, rng.next_u64()).estimate, L);
        report.sound(approx_lcs_relaxed(x, y, T, c, rng).estimate, L);
        report.sound(algorithm1(x, y, T, c, rng), L);
        report.sound(algorithm2(x, y, T, c, rng), L);
        const auto grid = guess_grid(n);
        for (int g = 0; g < 2; ++g) {
            const GuessTriple guess = grid[rng.uniform_int(0, grid.size() - 1)];
            report.sound(algorithm3(x, y, T, guess, c, rng), L);
            report.sound(algorithm4(x, y, T, guess, c, rng), L);
        }
        const HSIndex idx = hs_preprocess(y);
        const double beta = 1.0 + rng.uniform01() * static_cast<double>(n);
        report.sound(generalized_basic_approx(x, idx, beta, c.whp, rng), L);
        const auto ell = static_cast<std::size_t>(rng.uniform_int(1, n + 1));
        if (basic_decision(x, idx, ell, c.whp, rng) == Decision::kAtLeast) report.sound(ell, L);
        else ++report.soundness_checked;
    }
    timed(report, start);
    return report;
}

SuiteReport suite_regime_coverage(std::uint64_t trials, std::uint64_t seed, const ApproxConfig& cfg) {
    const auto start = Clock::now();
    trials = pick(trials, 20);
    SuiteReport report = new_report("regime-coverage", seed, trials);
    constexpr std::size_t n = 2048;
    struct Family {
        const char* name;
        const char* favored;
        InstanceSpec spec;
        std::uint64_t T;
    };
    // Unary runs of 32 over two symbols, on a grid whose blocks are exactly
    // those runs (T = 2n gives m = 32).
    const Family families[] = {
        {"short-lcs", kAlgorithm1, {GeneratorKind::kPlanted, n, 256, 16, 0, 0.0}, n},
        {"unary-blocks", kAlgorithm2, {GeneratorKind::kUnaryHeavy, n, 2, 0, 32, 0.0}, 2 * n},
        {"diagonal", kAlgorithm3, {GeneratorKind::kDiagonalSkew, n, 4, 0, 0, 0.5}, n},
        {"sparse-planted", kAlgorithm4, {GeneratorKind::kPlanted, n, 256, n / 2, 0, 0.0}, n},
    };
    std::uint64_t index = 0;
    for (std::size_t f = 0; f < std::size(families); ++f) {
        const Family& fam = families[f];
        Check& c = report.check(std::string(fam.name) + "/" + fam.favored + "-attains-max", 0.8);
        for (std::uint64_t t = 0; t < trials; ++t) {
            RngStream rng = trial_rng(seed, 130 + f, t);
            const auto inst = generate_instance(fam.spec, rng);
            const std::uint64_t L = lcs_length(inst.x, inst.y);
            const ApproxResult r = approx_lcs(inst.x, inst.y, fam.T, cfg, rng.next_u64());
            report.sound(r.estimate, L);
            const auto it = r.breakdown.find(fam.favored);
            c.record(it != r.breakdown.end() && it->second == r.estimate);
            report.records.push_back(
                {index++, fam.name, n, fam.T, L, r.estimate, r.steps, r.breakdown});
        }
    }
    timed(report, start);
    return report;
}

SuiteReport suite_lemma_bounds(std::uint64_t trials, std::uint64_t seed, const ApproxConfig& cfg) {
    const auto start = Clock::now();
    trials = pick(trials, 1000);
    SuiteReport report = new_report("lemma-bounds", seed, trials);
    merge(report, suite_decision_soundness(trials, seed, cfg.whp));
    merge(report, suite_basic_approx(trials, seed, cfg.whp));
    merge(report, suite_matching_pairs(trials, seed, cfg.whp));
    merge(report, suite_single_symbol(trials, seed, cfg.whp));
    timed(report, start);
    return report;
}

std::vector<std::string> suite_names() {
    return {"hs-vs-dp",       "decision-soundness", "basic-approx", "matching-pairs",
            "single-symbol",  "block-dp",           "eq1-mu",       "structural",
            "algorithm-bounds", "end-to-end",       "budget",       "soundness",
            "regime-coverage", "lemma-bounds"};
}

SuiteReport run_suite(std::string_view name, const SuiteOptions& o) {
    if (name == "hs-vs-dp") return suite_hs_vs_dp(o.trials, o.seed);
    if (name == "decision-soundness") return suite_decision_soundness(o.trials, o.seed, o.cfg.whp);
    if (name == "basic-approx") return suite_basic_approx(o.trials, o.seed, o.cfg.whp);
    if (name == "matching-pairs") return suite_matching_pairs(o.trials, o.seed, o.cfg.whp);
    if (name == "single-symbol") return suite_single_symbol(o.trials, o.seed, o.cfg.whp);
    if (name == "block-dp") return suite_block_dp(o.trials, o.seed);
    if (name == "eq1-mu" || name == "structural") {
        SuiteReport r = suite_structural(o.trials, o.seed);
        r.suite = std::string(name);
        return r;
    }
    if (name == "algorithm-bounds") return suite_algorithm_bounds(o.trials, o.seed, o.cfg);
    if (name == "end-to-end") return suite_end_to_end(o.trials, o.seed, o.cfg);
    if (name == "budget") return suite_budget(o.trials, o.seed, o.cfg);
    if (name == "soundness") return suite_soundness(o.trials, o.seed, o.cfg);
    if (name == "regime-coverage") return suite_regime_coverage(o.trials, o.seed, o.cfg);
    if (name == "lemma-bounds") return suite_lemma_bounds(o.trials, o.seed, o.cfg);
    throw std::invalid_argument("unknown suite: " + std::string(name));
}

}  // namespace approxlcs::harness
