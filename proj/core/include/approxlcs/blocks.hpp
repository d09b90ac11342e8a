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


// Block partition of an instance, block-sequence dynamic programming and
// exact per-block oracles.

#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "approxlcs/exact_lcs.hpp"
#include "approxlcs/matching_pairs.hpp"
#include "approxlcs/symbol_string.hpp"

namespace approxlcs {

/// Partition of x and y into k blocks of length m each (the last block of a
/// side may be shorter or empty). Blocks are views into the caller's strings,
/// which must outlive the grid.
struct BlockGrid {
    std::size_t n = 0;        // max(|x|, |y|)
    std::uint64_t T = 0;      // time budget the grid was built for
    std::size_t m = 1;        // block length
    std::size_t k = 0;        // blocks per side
    std::vector<SymbolView> blocks_x;
    std::vector<SymbolView> blocks_y;
};

/// Smallest m >= 1 with m >= n / sqrt(T), computed in exact integer arithmetic.
std::size_t block_length(std::size_t n, std::uint64_t T);

/// Throws std::invalid_argument unless n <= T <= n^2 (any T is accepted for n = 0).
void check_time_budget(std::size_t n, std::uint64_t T);

BlockGrid split_blocks(SymbolView x, SymbolView y, std::uint64_t T);

using BlockEstimates = SparseBlockMatrix<std::uint64_t>;

/// Maximum of sum L~_ij over block sequences (blocks strictly increasing in
/// both coordinates) by the O(k^2) recurrence
/// D[i,j] = max(L~_ij + D[i-1,j-1], D[i-1,j], D[i,j-1]).
std::uint64_t block_sequence_dp(const BlockEstimates& est, std::size_t k);

/// Dense row-major variant (values[i * k + j]).
std::uint64_t block_sequence_dp(const std::vector<std::uint64_t>& values, std::size_t k);

/// Same optimum together with one optimal block sequence (0-based, ascending).
/// Ties prefer the diagonal move.
std::pair<std::uint64_t, std::vector<std::pair<std::size_t, std::size_t>>>
block_sequence_dp_path(const BlockEstimates& est, std::size_t k);

/// Same optimum in O(s log k) for s nonzero entries.
std::uint64_t sparse_block_sequence_dp(const BlockEstimates& est);

/// Diagonal {(i, j) : i - j = d} of a k x k grid, 0-based, ascending in i.
/// Requires -k < d < k.
std::vector<std::pair<std::size_t, std::size_t>> diagonal_blocks(std::size_t k, std::ptrdiff_t d);

/// Exact L_ij for every block pair. Refuses with OracleCapExceeded when
/// k^2 m^2 exceeds `cap`.
BlockEstimates oracle_block_lcs(const BlockGrid& grid, std::uint64_t cap = kDefaultOracleCap);

/// Exact M_ij for every block pair, same cap.
BlockEstimates oracle_block_matching_pairs(const BlockGrid& grid,
                                           std::uint64_t cap = kDefaultOracleCap);

/// lambda = sum over all blocks of L_ij.
std::uint64_t oracle_lambda(const BlockGrid& grid, std::uint64_t cap = kDefaultOracleCap);

/// mu = max over block sequences of sum M_ij.
std::uint64_t oracle_mu(const BlockGrid& grid, std::uint64_t cap = kDefaultOracleCap);

}  // namespace approxlcs
