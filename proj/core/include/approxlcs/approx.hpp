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


// Top-level approximation: Algorithms 1-4, parameter guessing, the relaxed
// combiner and the budget-capped, repeated wrapper.

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "approxlcs/budget.hpp"
#include "approxlcs/matching_pairs.hpp"
#include "approxlcs/rng.hpp"
#include "approxlcs/sampling.hpp"
#include "approxlcs/symbol_string.hpp"

namespace approxlcs {

struct ApproxConfig {
    WhpConfig whp;
    /// Each guessed call may spend abort_multiplier * T * ceil(log2(n+1)) steps.
    std::uint64_t abort_multiplier = 64;
    /// Pre-subsample both strings and fall back to any matching pair.
    bool strict_linear = false;
    /// Combine blockwise single-symbol repetitions by median instead of maximum.
    bool median_variant = false;
    /// Reuse exact per-block answers whenever every block decision runs on the
    /// exact (non-subsampled) path. Results keep their distribution; only the
    /// work is shared. Disable to run every step literally.
    bool exact_shortcuts = true;
    /// Constant in the Algorithm 3 sample size 4 * (g T / lambda) * log^2 n.
    double block_sample_constant = 4.0;
};

/// Power-of-two guesses for L, lambda and mu.
struct GuessTriple {
    std::uint64_t L = 1;
    std::uint64_t lambda = 1;
    std::uint64_t mu = 1;
    friend bool operator==(const GuessTriple&, const GuessTriple&) = default;
};

/// L = 2^i for 0 <= i <= ceil(log2 n); lambda = 2^j, mu = 2^k for
/// 0 <= j, k <= 2 ceil(log2 n). Ordered by (i, j, k).
std::vector<GuessTriple> guess_grid(std::size_t n);

struct ApproxResult {
    std::uint64_t estimate = 0;
    /// Per-component maxima; estimate is the maximum of these.
    std::map<std::string, std::uint64_t> breakdown;
    std::uint64_t steps = 0;
    std::uint64_t seed = 0;
    /// Number of budget-capped units (guessed calls or repetitions) that aborted.
    std::uint64_t aborted = 0;
};

inline constexpr const char* kAlgorithm1 = "algorithm1";
inline constexpr const char* kAlgorithm2 = "algorithm2";
inline constexpr const char* kAlgorithm3 = "algorithm3";
inline constexpr const char* kAlgorithm4 = "algorithm4";
inline constexpr const char* kMatchingPair = "matching_pair";

/// Every routine below requires n <= T <= n^2 for n = max(|x|, |y|) (throws
/// std::invalid_argument otherwise; n = 0 yields 0) and never returns more
/// than L(x, y). A BudgetExhausted from `meter` propagates to the caller.

/// max(single-symbol bound, generalized basic approximation with beta = max(1, M/2T)).
std::uint64_t algorithm1(SymbolView x, SymbolView y, std::uint64_t T, const ApproxConfig& cfg,
                         RngStream& rng, BudgetMeter* meter = nullptr);

/// Blockwise single-symbol estimates with q = M/4T, then block-sequence DP.
std::uint64_t algorithm2(SymbolView x, SymbolView y, std::uint64_t T, const ApproxConfig& cfg,
                         RngStream& rng, BudgetMeter* meter = nullptr);

/// Seeded-diagonal estimate for guesses (lambda, mu); L is not used.
std::uint64_t algorithm3(SymbolView x, SymbolView y, std::uint64_t T, const GuessTriple& guess,
                         const ApproxConfig& cfg, RngStream& rng, BudgetMeter* meter = nullptr);

/// Sampled threshold decisions on blocks with few estimated matching pairs,
/// then block-sequence DP.
std::uint64_t algorithm4(SymbolView x, SymbolView y, std::uint64_t T, const GuessTriple& guess,
                         const ApproxConfig& cfg, RngStream& rng, BudgetMeter* meter = nullptr);

struct GuessingOutcome {
    std::uint64_t algorithm3 = 0;
    std::uint64_t algorithm4 = 0;
    std::uint64_t aborted = 0;
    std::uint64_t value() const { return algorithm3 > algorithm4 ? algorithm3 : algorithm4; }
};

/// Runs Algorithms 3 and 4 over the whole guess grid, each call under its own
/// meter of abort_multiplier * T * ceil(log2(n+1)) steps (child of `meter`).
/// Aborted calls contribute 0.
GuessingOutcome parameter_guessing(SymbolView x, SymbolView y, std::uint64_t T,
                                   const ApproxConfig& cfg, RngStream& rng,
                                   BudgetMeter* meter = nullptr);

/// max(Algorithm 1, Algorithm 2, parameter guessing) with breakdown.
ApproxResult approx_lcs_relaxed(SymbolView x, SymbolView y, std::uint64_t T,
                                const ApproxConfig& cfg, RngStream& rng,
                                BudgetMeter* meter = nullptr);

/// 2 ceil(log2(n+1)) independent relaxed runs, each capped at
/// abort_multiplier * T * ceil(log2(n+1))^3 / 2 steps, maximum taken. Total
/// charged steps never exceed abort_multiplier * T * ceil(log2(n+1))^4.
ApproxResult approx_lcs(SymbolView x, SymbolView y, std::uint64_t T, const ApproxConfig& cfg,
                        std::uint64_t seed);

}  // namespace approxlcs
