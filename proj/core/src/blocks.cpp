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


#include "approxlcs/blocks.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace approxlcs {

std::size_t block_length(std::size_t n, std::uint64_t T) {
    if (n == 0 || T == 0) return 1;
    using u128 = unsigned __int128;
    const u128 target = static_cast<u128>(n) * n;
    // Floating-point guess, then fix up so that m is minimal with m^2 T >= n^2.
    auto m = static_cast<std::size_t>(
        std::ceil(static_cast<double>(n) / std::sqrt(static_cast<double>(T))));
    m = std::max<std::size_t>(m, 1);
    while (m > 1 && static_cast<u128>(m - 1) * (m - 1) * T >= target) --m;
    while (static_cast<u128>(m) * m * T < target) ++m;
    return m;
}

void check_time_budget(std::size_t n, std::uint64_t T) {
    if (n == 0) return;
    const auto n2 = static_cast<unsigned __int128>(n) * n;
    if (T < n || static_cast<unsigned __int128>(T) > n2) {
        throw std::invalid_argument("time budget " + std::to_string(T) +
                                    " outside [n, n^2] for n = " + std::to_string(n));
    }
}

BlockGrid split_blocks(SymbolView x, SymbolView y, std::uint64_t T) {
    BlockGrid grid;
    grid.n = std::max(x.size(), y.size());
    check_time_budget(grid.n, T);
    grid.T = T;
    grid.m = block_length(grid.n, T);
    grid.k = (grid.n + grid.m - 1) / grid.m;
    auto cut = [&](SymbolView s, std::vector<SymbolView>& out) {
        out.reserve(grid.k);
        for (std::size_t i = 0; i < grid.k; ++i) {
            const std::size_t begin = std::min(i * grid.m, s.size());
            const std::size_t end = std::min(begin + grid.m, s.size());
            out.push_back(s.subspan(begin, end - begin));
        }
    };
    cut(x, grid.blocks_x);
    cut(y, grid.blocks_y);
    return grid;
}

std::uint64_t block_sequence_dp(const std::vector<std::uint64_t>& values, std::size_t k) {
    if (values.size() != k * k) throw std::invalid_argument("block_sequence_dp: size mismatch");
    std::vector<std::uint64_t> prev(k + 1, 0);
    std::vector<std::uint64_t> cur(k + 1, 0);
    for (std::size_t i = 1; i <= k; ++i) {
        for (std::size_t j = 1; j <= k; ++j) {
            cur[j] = std::max({values[(i - 1) * k + (j - 1)] + prev[j - 1], prev[j], cur[j - 1]});
        }
        std::swap(prev, cur);
    }
    return prev[k];
}

std::uint64_t block_sequence_dp(const BlockEstimates& est, std::size_t k) {
    std::vector<std::uint64_t> values(k * k, 0);
    for (const auto& e : est.entries()) {
        if (e.i < k && e.j < k) values[std::size_t{e.i} * k + e.j] = e.value;
    }
    return block_sequence_dp(values, k);
}

std::pair<std::uint64_t, std::vector<std::pair<std::size_t, std::size_t>>>
block_sequence_dp_path(const BlockEstimates& est, std::size_t k) {
    const std::size_t w = k + 1;
    std::vector<std::uint64_t> D(w * w, 0);
    for (std::size_t i = 1; i <= k; ++i) {
        for (std::size_t j = 1; j <= k; ++j) {
            D[i * w + j] = std::max({est.at(i - 1, j - 1) + D[(i - 1) * w + j - 1],
                                     D[(i - 1) * w + j], D[i * w + j - 1]});
        }
    }
    std::vector<std::pair<std::size_t, std::size_t>> path;
    std::size_t i = k;
    std::size_t j = k;
    while (i > 0 && j > 0) {
        const std::uint64_t v = est.at(i - 1, j - 1);
        if (v > 0 && D[i * w + j] == v + D[(i - 1) * w + j - 1]) {
            path.emplace_back(i - 1, j - 1);
            --i;
            --j;
        } else if (D[i * w + j] == D[(i - 1) * w + j]) {
            --i;
        } else {
            --j;
        }
    }
    std::reverse(path.begin(), path.end());
    return {D[k * w + k], std::move(path)};
}

std::uint64_t sparse_block_sequence_dp(const BlockEstimates& est) {
    const auto& entries = est.entries();
    if (entries.empty()) return 0;
    std::size_t cols = 0;
    for (const auto& e : entries) cols = std::max<std::size_t>(cols, e.j + 1);
    // Fenwick tree over columns holding prefix maxima of finished rows.
    std::vector<std::uint64_t> tree(cols + 1, 0);
    auto query = [&](std::size_t upto) {  // max over columns [0, upto)
        std::uint64_t best = 0;
        for (std::size_t p = upto; p > 0; p &= p - 1) best = std::max(best, tree[p]);
        return best;
    };
    auto update = [&](std::size_t col, std::uint64_t v) {
        for (std::size_t p = col + 1; p <= cols; p += p & (0 - p)) tree[p] = std::max(tree[p], v);
    };
    std::uint64_t best = 0;
    std::vector<std::pair<std::size_t, std::uint64_t>> row;
    for (std::size_t a = 0; a < entries.size();) {
        std::size_t b = a;
        row.clear();
        while (b < entries.size() && entries[b].i == entries[a].i) {
            const auto& e = entries[b];
            row.emplace_back(e.j, query(e.j) + e.value);
            ++b;
        }
        for (const auto& [col, v] : row) {
            update(col, v);
            best = std::max(best, v);
        }
        a = b;
    }
    return best;
}

std::vector<std::pair<std::size_t, std::size_t>> diagonal_blocks(std::size_t k,
                                                                 std::ptrdiff_t d) {
    const auto sk = static_cast<std::ptrdiff_t>(k);
    if (d <= -sk || d >= sk) throw std::invalid_argument("diagonal offset outside (-k, k)");
    std::vector<std::pair<std::size_t, std::size_t>> out;
    const std::size_t i0 = d > 0 ? static_cast<std::size_t>(d) : 0;
    for (std::size_t i = i0; i < k; ++i) {
        const auto j = static_cast<std::ptrdiff_t>(i) - d;
        if (j >= sk) break;
        out.emplace_back(i, static_cast<std::size_t>(j));
    }
    return out;
}

namespace {

void check_grid_cap(const BlockGrid& grid, std::uint64_t cap) {
    const auto cells = static_cast<unsigned __int128>(grid.k) * grid.k * grid.m * grid.m;
    if (cells > cap) {
        throw OracleCapExceeded("block oracle refused: k^2 m^2 = " +
                                std::to_string(static_cast<std::uint64_t>(cells)) +
                                " exceeds cap " + std::to_string(cap));
    }
}

template <typename PerBlock>
BlockEstimates per_block(const BlockGrid& grid, PerBlock&& f) {
    std::vector<BlockEstimates::Entry> entries;
    for (std::size_t i = 0; i < grid.k; ++i) {
        for (std::size_t j = 0; j < grid.k; ++j) {
            const std::uint64_t v = f(grid.blocks_x[i], grid.blocks_y[j]);
            if (v > 0) {
                entries.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j), v});
            }
        }
    }
    return BlockEstimates(grid.k, std::move(entries));
}

}  // namespace

BlockEstimates oracle_block_lcs(const BlockGrid& grid, std::uint64_t cap) {
    check_grid_cap(grid, cap);
    return per_block(grid, [](SymbolView a, SymbolView b) {
        return static_cast<std::uint64_t>(lcs_dp(a, b, false, kDefaultOracleCap).length);
    });
}

BlockEstimates oracle_block_matching_pairs(const BlockGrid& grid, std::uint64_t cap) {
    check_grid_cap(grid, cap);
    Symbol top = 0;
    for (SymbolView b : grid.blocks_x) {
        for (Symbol s : b) top = std::max(top, s + 1);
    }
    std::vector<std::uint64_t> counts(top, 0);
    std::vector<BlockEstimates::Entry> entries;
    for (std::size_t i = 0; i < grid.k; ++i) {
        for (Symbol s : grid.blocks_x[i]) ++counts[s];
        for (std::size_t j = 0; j < grid.k; ++j) {
            std::uint64_t v = 0;
            for (Symbol s : grid.blocks_y[j]) v += s < top ? counts[s] : 0;
            if (v > 0) {
                entries.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j), v});
            }
        }
        for (Symbol s : grid.blocks_x[i]) counts[s] = 0;
    }
    return BlockEstimates(grid.k, std::move(entries));
}

std::uint64_t oracle_lambda(const BlockGrid& grid, std::uint64_t cap) {
    const BlockEstimates est = oracle_block_lcs(grid, cap);
    std::uint64_t total = 0;
    for (const auto& e : est.entries()) total += e.value;
    return total;
}

std::uint64_t oracle_mu(const BlockGrid& grid, std::uint64_t cap) {
    return sparse_block_sequence_dp(oracle_block_matching_pairs(grid, cap));
}

}  // namespace approxlcs
