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


// Subsampling-based approximation and decision primitives on top of the
// Hunt-Szymanski query.

#pragma once

#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>

#include "approxlcs/budget.hpp"
#include "approxlcs/exact_lcs.hpp"
#include "approxlcs/rng.hpp"
#include "approxlcs/symbol_string.hpp"

namespace approxlcs {

/// High-probability knobs shared by all randomized routines.
struct WhpConfig {
    /// Target failure probability is n^-c.
    unsigned c = 2;
    /// Repetitions of boosted estimators are repetition_multiplier * ceil(log2(n+1)).
    unsigned repetition_multiplier = 3;
    /// n used inside logarithms. 0 means: the length of the operands at hand.
    /// Subroutines working on blocks pass the full input length here so that
    /// their guarantees survive a union bound over all blocks.
    std::size_t problem_size = 0;

    std::size_t log_base(std::size_t local_n) const {
        return problem_size > local_n ? problem_size : local_n;
    }
};

/// log2(n + 1); defined and positive for every n >= 1.
inline double log2p1(std::size_t n) { return std::log2(static_cast<double>(n) + 1.0); }

/// ceil(log2(n + 1)); equals the bit width of n.
inline unsigned ceil_log2p1(std::size_t n) {
    return static_cast<unsigned>(std::bit_width(n));
}

inline unsigned repetitions(const WhpConfig& cfg, std::size_t n) {
    const unsigned r = cfg.repetition_multiplier * ceil_log2p1(n);
    return r == 0 ? 1 : r;
}

/// Keeps each position independently with probability p, jumping between
/// kept positions with geometric skips. Requires 0 < p <= 1.
std::vector<Symbol> subsample(SymbolView x, double p, RngStream& rng);

SymbolString subsample_string(const SymbolString& x, double p, RngStream& rng);

struct BasicApprox {
    std::size_t length = 0;
    /// True when no subsampling happened, so `length` is the exact LCS.
    bool exact = false;
};

/// Beta-approximation from below: returns the exact LCS of a random
/// subsequence of x against the indexed y. Requires beta >= 1.
BasicApprox basic_approx_query(SymbolView x, const HSIndex& idx, double beta,
                               const WhpConfig& cfg, RngStream& rng,
                               BudgetMeter* meter = nullptr);

/// max(basic approximation, [M(x, y) > 0]).
std::size_t generalized_basic_approx(SymbolView x, const HSIndex& idx, double beta,
                                     const WhpConfig& cfg, RngStream& rng,
                                     BudgetMeter* meter = nullptr);

std::size_t generalized_basic_approx(SymbolView x, SymbolView y, double beta,
                                     const WhpConfig& cfg, RngStream& rng,
                                     BudgetMeter* meter = nullptr);

enum class Decision { kLess, kAtLeast };

/// Decides L(x, y) >= ell by querying with beta = n, n/2, ..., 1. A kAtLeast
/// answer is always correct. Requires 1 <= ell; ell > n answers kLess.
Decision basic_decision(SymbolView x, const HSIndex& idx, std::size_t ell,
                        const WhpConfig& cfg, RngStream& rng,
                        BudgetMeter* meter = nullptr);

}  // namespace approxlcs
