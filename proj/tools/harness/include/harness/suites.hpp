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


// Named statistical and oracle suites shared by the bench command and the
// acceptance runner.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "approxlcs/approx.hpp"
#include "harness/report.hpp"

namespace approxlcs::harness {

struct SuiteOptions {
    /// Trial count; 0 selects the suite default.
    std::uint64_t trials = 0;
    std::uint64_t seed = 1;
    ApproxConfig cfg;
};

/// Every accepted suite name, in a stable order.
std::vector<std::string> suite_names();

/// Runs a suite. Throws std::invalid_argument for an unknown name.
SuiteReport run_suite(std::string_view name, const SuiteOptions& options);

// Individual suites. `trials` has the meaning documented per suite; 0 picks
// the default shown.

/// Exhaustive binary pairs up to length 8, then random pairs (1000).
SuiteReport suite_hs_vs_dp(std::uint64_t trials, std::uint64_t seed);
/// basic_decision at ell = L, L + 1 and a random ell on n = 512 (1000).
SuiteReport suite_decision_soundness(std::uint64_t trials, std::uint64_t seed, const WhpConfig& whp);
/// basic_approx_query on x = y, n = 1024, per beta; subsampling mean (1000).
SuiteReport suite_basic_approx(std::uint64_t trials, std::uint64_t seed, const WhpConfig& whp);
/// Matching-pair estimator on an 8 x 8 grid of 64-blocks (100).
SuiteReport suite_matching_pairs(std::uint64_t trials, std::uint64_t seed, const WhpConfig& whp);
/// Whole-string single-symbol bounds (1000 instances) and the blockwise
/// variant on trials / 10 grids.
SuiteReport suite_single_symbol(std::uint64_t trials, std::uint64_t seed, const WhpConfig& whp);
/// Block DP against enumeration: exhaustive k <= 3, sampled k = 4 (100000).
SuiteReport suite_block_dp(std::uint64_t trials, std::uint64_t seed);
/// M < 2 mu sqrt(T) and block alignment on random instances (500).
SuiteReport suite_structural(std::uint64_t trials, std::uint64_t seed);
/// Per-algorithm lower bounds at their documented operating points (100).
SuiteReport suite_algorithm_bounds(std::uint64_t trials, std::uint64_t seed, const ApproxConfig& cfg);
/// approx_lcs on n = 2048, T = n, alphabets 4, 16, 256 (100 per family).
SuiteReport suite_end_to_end(std::uint64_t trials, std::uint64_t seed, const ApproxConfig& cfg);
/// Step counts of approx_lcs for n = 2^10 .. 2^14, T = n (1 per size).
SuiteReport suite_budget(std::uint64_t trials, std::uint64_t seed, const ApproxConfig& cfg);
/// Every estimator and decision on small mixed instances against lcs_dp (2000).
SuiteReport suite_soundness(std::uint64_t trials, std::uint64_t seed, const ApproxConfig& cfg);
/// Which component attains the maximum on four targeted families (20 per family).
SuiteReport suite_regime_coverage(std::uint64_t trials, std::uint64_t seed, const ApproxConfig& cfg);
/// decision-soundness, basic-approx, matching-pairs and single-symbol together.
SuiteReport suite_lemma_bounds(std::uint64_t trials, std::uint64_t seed, const ApproxConfig& cfg);

}  // namespace approxlcs::harness
