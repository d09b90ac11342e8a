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

#include <algorithm>

#include "approxlcs/exact_lcs.hpp"
#include "approxlcs/matching_pairs.hpp"
#include "test_util.hpp"

namespace approxlcs {
namespace {

using testing::letters;
using testing::random_symbols;

std::vector<SymbolView> cut(const SymbolString& s, std::size_t m) {
    std::vector<SymbolView> out;
    for (std::size_t b = 0; b < s.size(); b += m) {
        out.push_back(SymbolView(s.symbols()).subspan(b, std::min(m, s.size() - b)));
    }
    return out;
}

TEST(SparseBlockMatrix, DropsZerosAndKeepsLargestDuplicate) {
    using M = SparseBlockMatrix<std::uint64_t>;
    const M mat(3, {{2, 1, 5}, {0, 0, 0}, {2, 1, 7}, {1, 2, 3}});
    ASSERT_EQ(mat.nonzeros(), 2u);
    EXPECT_EQ(mat.at(2, 1), 7u);
    EXPECT_EQ(mat.at(1, 2), 3u);
    EXPECT_EQ(mat.at(0, 0), 0u);
    EXPECT_EQ(mat.entries().front().i, 1u);
}

TEST(LayeredGraph, SingleBlockTwoSymbols) {
    const auto x = letters("ab");
    const auto y = letters("ab");
    const std::vector<SymbolView> bx{x}, by{y};
    const auto g = build_layered_graph(bx, by);
    ASSERT_EQ(g.nodes().size(), 2u);
    for (const auto& v : g.nodes()) {
        EXPECT_EQ(v.l, 0u);
        EXPECT_EQ(v.r, 0u);
        EXPECT_EQ(g.left_neighbors(v).size(), 1u);
        EXPECT_EQ(g.right_neighbors(v).size(), 1u);
    }
    EXPECT_EQ(g.nodes()[0].sigma, 0u);
    EXPECT_EQ(g.nodes()[1].sigma, 1u);
}

TEST(LayeredGraph, DyadicBucket) {
    const auto x = letters("aaaa");
    const auto y = letters("a");
    const std::vector<SymbolView> bx{x}, by{y};
    const auto g = build_layered_graph(bx, by);
    ASSERT_EQ(g.nodes().size(), 1u);
    EXPECT_EQ(g.nodes()[0].l, 2u);
    EXPECT_EQ(g.nodes()[0].r, 0u);
}

TEST(LayeredGraph, EmptyBlocksHaveNoEdges) {
    const std::vector<SymbolView> bx{SymbolView{}, SymbolView{}}, by{SymbolView{}};
    const auto g = build_layered_graph(bx, by);
    EXPECT_TRUE(g.nodes().empty());
    EXPECT_EQ(g.left_count(), 2u);
}

TEST(LayeredGraph, EdgesMatchFrequencies) {
    RngStream rng(31);
    const auto x = random_symbols(256, 6, rng);
    const auto y = random_symbols(256, 6, rng);
    const auto bx = cut(x, 32);
    const auto by = cut(y, 32);
    const auto g = build_layered_graph(bx, by);
    // Every common symbol of a block pair appears in exactly one node joining them.
    for (std::size_t i = 0; i < bx.size(); ++i) {
        for (std::size_t j = 0; j < by.size(); ++j) {
            const auto fx = dense_frequencies(bx[i], 6);
            const auto fy = dense_frequencies(by[j], 6);
            for (Symbol s = 0; s < 6; ++s) {
                int joined = 0;
                for (const auto& v : g.nodes()) {
                    if (v.sigma != s) continue;
                    const auto left = g.left_neighbors(v);
                    const auto right = g.right_neighbors(v);
                    const bool has_i = std::find(left.begin(), left.end(), i) != left.end();
                    const bool has_j = std::find(right.begin(), right.end(), j) != right.end();
                    if (has_i) { EXPECT_EQ(dyadic_bucket(fx[s]), v.l); }
                    if (has_j) { EXPECT_EQ(dyadic_bucket(fy[s]), v.r); }
                    joined += has_i && has_j;
                }
                EXPECT_EQ(joined, (fx[s] > 0 && fy[s] > 0) ? 1 : 0);
            }
        }
    }
}

TEST(EstimateMatchingPairs, DeterministicSmallQ) {
    RngStream rng(32);
    const auto x = letters("ab");
    const std::vector<SymbolView> b{x};
    const auto est = estimate_block_matching_pairs(b, b, 8.0, WhpConfig{}, rng);
    EXPECT_DOUBLE_EQ(est.at(0, 0), 2.0);

    const auto rx = random_symbols(512, 16, rng);
    const auto ry = random_symbols(512, 16, rng);
    const auto bx = cut(rx, 64);
    const auto by = cut(ry, 64);
    const auto det = estimate_block_matching_pairs(bx, by, 4.0, WhpConfig{}, rng);
    for (std::size_t i = 0; i < 8; ++i) {
        for (std::size_t j = 0; j < 8; ++j) {
            const double mij = static_cast<double>(count_matching_pairs(bx[i], by[j]));
            EXPECT_GE(det.at(i, j), mij / 4);
            EXPECT_LE(det.at(i, j), mij);
        }
    }
}

TEST(EstimateMatchingPairs, SampledBoundsOnGrid) {
    RngStream rng(33);
    int good = 0;
    for (int t = 0; t < 100; ++t) {
        const auto x = random_symbols(512, 16, rng);
        const auto y = random_symbols(512, 16, rng);
        const auto bx = cut(x, 64);
        const auto by = cut(y, 64);
        const double q = static_cast<double>(count_matching_pairs(x, y)) / 64.0;
        SamplingStats stats;
        const auto graph = build_layered_graph(bx, by);
        const auto est = estimate_block_matching_pairs(graph, q, WhpConfig{}, rng, nullptr, &stats);
        EXPECT_GT(stats.repetitions, 1u);
        bool all = true;
        for (std::size_t i = 0; i < 8; ++i) {
            for (std::size_t j = 0; j < 8; ++j) {
                const double mij = static_cast<double>(count_matching_pairs(bx[i], by[j]));
                all = all && mij / 8 - q <= est.at(i, j) && est.at(i, j) <= 4 * mij;
            }
        }
        good += all;
    }
    EXPECT_GE(good, 99);
}

TEST(EstimateMatchingPairs, RejectsNonPositiveQ) {
    RngStream rng(34);
    const auto x = letters("ab");
    const std::vector<SymbolView> b{x};
    EXPECT_THROW(estimate_block_matching_pairs(b, b, 0.0, WhpConfig{}, rng), std::invalid_argument);
}

TEST(EstimateMatchingPairs, VacuousLowerBoundWhenQLarge) {
    RngStream rng(35);
    const auto x = random_symbols(64, 4, rng);
    const auto bx = cut(x, 16);
    const double q = 1e9;
    const auto est = estimate_block_matching_pairs(bx, bx, q, WhpConfig{}, rng);
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            const double mij = static_cast<double>(count_matching_pairs(bx[i], bx[j]));
            EXPECT_LE(mij / 8 - q, est.at(i, j));
        }
    }
}

TEST(SingleSymbol, Examples) {
    const auto r = single_symbol_lcs(letters("aabb"), letters("abab"));
    EXPECT_EQ(r.length, 2u);
    ASSERT_TRUE(r.symbol.has_value());
    EXPECT_EQ(*r.symbol, 0u);
    EXPECT_FALSE(single_symbol_lcs(letters("ab"), letters("cd")).symbol.has_value());
    EXPECT_EQ(single_symbol_lcs(letters("ab"), letters("cd")).length, 0u);
    EXPECT_EQ(single_symbol_lcs(letters("aaaa"), letters("aaaa")).length, 4u);
}

TEST(SingleSymbol, BoundsOnRandomInstances) {
    RngStream rng(36);
    for (int t = 0; t < 1000; ++t) {
        const std::uint32_t a = static_cast<std::uint32_t>(rng.uniform_int(1, 32));
        const auto n = static_cast<std::size_t>(rng.uniform_int(1, 200));
        const auto x = random_symbols(n, a, rng);
        const auto y = random_symbols(n, a, rng);
        const auto s = single_symbol_lcs(x, y);
        EXPECT_GE(2 * n * s.length, count_matching_pairs(x, y));
        EXPECT_LE(s.length, lcs_length(x, y));
    }
}

TEST(BlockwiseSingleSymbol, Examples) {
    RngStream rng(37);
    const auto x = letters("ab");
    const std::vector<SymbolView> b{x};
    EXPECT_EQ(blockwise_single_symbol(b, b, 8.0, WhpConfig{}, rng).at(0, 0), 1u);
    const auto u = letters("aaaa");
    const auto v = letters("bbbb");
    const std::vector<SymbolView> bu{u}, bv{v};
    EXPECT_EQ(blockwise_single_symbol(bu, bv, 1.0, WhpConfig{}, rng).nonzeros(), 0u);
}

TEST(BlockwiseSingleSymbol, BoundsOnGrid) {
    RngStream rng(38);
    std::size_t good = 0;
    std::size_t total = 0;
    for (const auto combine : {RepetitionCombine::kMax, RepetitionCombine::kMedian}) {
        for (int t = 0; t < 50; ++t) {
            const auto x = random_symbols(512, 4, rng);
            const auto y = random_symbols(512, 4, rng);
            const auto bx = cut(x, 64);
            const auto by = cut(y, 64);
            const double q = static_cast<double>(count_matching_pairs(x, y)) / 64.0;
            const auto est = blockwise_single_symbol(bx, by, q, WhpConfig{}, rng, nullptr, combine);
            for (std::size_t i = 0; i < 8; ++i) {
                for (std::size_t j = 0; j < 8; ++j) {
                    const double mij = static_cast<double>(count_matching_pairs(bx[i], by[j]));
                    EXPECT_LE(est.at(i, j), lcs_length(bx[i], by[j]));
                    good += static_cast<double>(est.at(i, j)) >= (mij - q) / (16.0 * 64);
                    ++total;
                }
            }
        }
    }
    EXPECT_GE(good * 100, total * 99);
}

}  // namespace
}  // namespace approxlcs
