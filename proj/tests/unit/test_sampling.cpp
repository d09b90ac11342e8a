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

#include <cmath>
#include <set>

#include "approxlcs/budget.hpp"
#include "approxlcs/exact_lcs.hpp"
#include "approxlcs/rng.hpp"
#include "approxlcs/sampling.hpp"
#include "test_util.hpp"

namespace approxlcs {
namespace {

using testing::letters;
using testing::random_symbols;

TEST(RngStream, SameSeedSameDraws) {
    RngStream a(42);
    RngStream b(42);
    for (int t = 0; t < 100; ++t) EXPECT_EQ(a.next_u64(), b.next_u64());
}

TEST(RngStream, ResumesFromPosition) {
    RngStream a(7);
    for (int t = 0; t < 10; ++t) a.next_u64();
    RngStream b(7, a.position());
    EXPECT_EQ(a.next_u64(), b.next_u64());
}

TEST(RngStream, SplitIsIndependentOfParentPosition) {
    RngStream a(9);
    const auto before = a.split(3).next_u64();
    a.next_u64();
    EXPECT_EQ(a.split(3).next_u64(), before);
    EXPECT_NE(a.split(3).next_u64(), a.split(4).next_u64());
}

TEST(RngStream, UniformIntStaysInRange) {
    RngStream rng(1);
    std::set<std::uint64_t> seen;
    for (int t = 0; t < 2000; ++t) {
        const auto v = rng.uniform_int(3, 9);
        EXPECT_GE(v, 3u);
        EXPECT_LE(v, 9u);
        seen.insert(v);
    }
    EXPECT_EQ(seen.size(), 7u);
    EXPECT_EQ(rng.uniform_int(5, 5), 5u);
}

TEST(RngStream, GeometricMean) {
    RngStream rng(2);
    const double p = 0.2;
    double total = 0;
    const int trials = 20000;
    for (int t = 0; t < trials; ++t) {
        const auto g = rng.geometric(p);
        EXPECT_GE(g, 1u);
        total += static_cast<double>(g);
    }
    const double sd = std::sqrt((1 - p) / (p * p) / trials);
    EXPECT_NEAR(total / trials, 1 / p, 4 * sd);
    EXPECT_EQ(rng.geometric(1.0), 1u);
}

TEST(BudgetMeter, ThrowsPastLimitAndStaysAborted) {
    BudgetMeter m(10);
    m.charge(10);
    EXPECT_FALSE(m.aborted());
    EXPECT_THROW(m.charge(1), BudgetExhausted);
    EXPECT_TRUE(m.aborted());
    EXPECT_EQ(m.steps(), 10u);
    EXPECT_THROW(m.charge(0), BudgetExhausted);
}

TEST(BudgetMeter, ChildChargesParent) {
    BudgetMeter parent(15);
    BudgetMeter child(100, &parent);
    child.charge(10);
    EXPECT_EQ(parent.steps(), 10u);
    EXPECT_THROW(child.charge(10), BudgetExhausted);
    EXPECT_TRUE(parent.aborted());
    EXPECT_TRUE(child.aborted());
    EXPECT_EQ(parent.steps(), 10u);
    BudgetMeter sibling(100, &parent);
    EXPECT_TRUE(sibling.exhausted());
}

TEST(Logs, Conventions) {
    EXPECT_DOUBLE_EQ(log2p1(1), 1.0);
    EXPECT_EQ(ceil_log2p1(1), 1u);
    EXPECT_EQ(ceil_log2p1(4), 3u);
    EXPECT_EQ(ceil_log2p1(7), 3u);
    WhpConfig cfg;
    EXPECT_EQ(repetitions(cfg, 1024), 3u * 11u);
    EXPECT_EQ(repetitions(cfg, 0), 1u);
}

TEST(Subsample, KeepAll) {
    RngStream rng(3);
    const auto x = random_symbols(100, 4, rng);
    EXPECT_EQ(subsample_string(x, 1.0, rng), x);
}

TEST(Subsample, OutputIsSubsequence) {
    RngStream rng(4);
    for (int t = 0; t < 200; ++t) {
        const auto x = random_symbols(rng.uniform_int(0, 300), 5, rng);
        const double p = 0.01 + 0.99 * rng.uniform01();
        EXPECT_TRUE(is_subsequence(subsample(x, p, rng), x));
    }
}

TEST(Subsample, MeanLengthWithinThreeSigma) {
    RngStream rng(5);
    const auto x = random_symbols(10000, 4, rng);
    double total = 0;
    for (int t = 0; t < 1000; ++t) total += static_cast<double>(subsample(x, 0.1, rng).size());
    const double sigma = std::sqrt(10000 * 0.1 * 0.9 / 1000);
    EXPECT_NEAR(total / 1000, 1000.0, 3 * sigma);
}

TEST(BasicApprox, BetaOneIsExact) {
    RngStream rng(6);
    const auto x = random_symbols(300, 4, rng);
    const auto y = random_symbols(300, 4, rng);
    const auto r = basic_approx_query(x, hs_preprocess(y), 1.0, WhpConfig{}, rng);
    EXPECT_TRUE(r.exact);
    EXPECT_EQ(r.length, lcs_length(x, y));
}

TEST(BasicApprox, RejectsBetaBelowOne) {
    RngStream rng(6);
    const auto x = letters("ab");
    EXPECT_THROW(basic_approx_query(x, hs_preprocess(x), 0.5, WhpConfig{}, rng),
                 std::invalid_argument);
}

TEST(BasicApprox, NoCommonSymbol) {
    RngStream rng(7);
    EXPECT_EQ(basic_approx_query(letters("aaaa"), hs_preprocess(letters("bbbb")), 1000.0,
                                 WhpConfig{}, rng)
                  .length,
              0u);
}

TEST(BasicApprox, IdenticalStringsBeta32) {
    RngStream rng(8);
    const std::size_t n = 1024;
    int good = 0;
    for (int t = 0; t < 1000; ++t) {
        const auto x = random_symbols(n, 4, rng);
        const auto r = basic_approx_query(x, hs_preprocess(x), 32.0, WhpConfig{}, rng);
        EXPECT_LE(r.length, n);
        good += static_cast<double>(r.length) > n / 32.0 - 1.0;
    }
    EXPECT_GE(good, 990);
}

TEST(BasicApprox, SubsampledPathIsSoundAndAccurate) {
    // c = 1 puts the exact-path cut-off near 80, so beta = 256 subsamples.
    WhpConfig cfg;
    cfg.c = 1;
    RngStream rng(9);
    int good = 0;
    for (int t = 0; t < 300; ++t) {
        const auto x = random_symbols(1024, 4, rng);
        const auto y = random_symbols(1024, 4, rng);
        const std::size_t L = lcs_length(x, y);
        const auto r = basic_approx_query(x, hs_preprocess(y), 256.0, cfg, rng);
        EXPECT_FALSE(r.exact);
        EXPECT_LE(r.length, L);
        good += static_cast<double>(r.length) > L / 256.0 - 1.0;
    }
    EXPECT_GE(good, 297);
}

TEST(GeneralizedBasicApprox, MatchingPairGivesAtLeastOne) {
    RngStream rng(10);
    for (int t = 0; t < 100; ++t) {
        const auto x = random_symbols(200, 64, rng);
        const auto y = random_symbols(200, 64, rng);
        const double beta = 1.0 + 1000.0 * rng.uniform01();
        const auto v = generalized_basic_approx(x, y, beta, WhpConfig{}, rng);
        EXPECT_LE(v, lcs_length(x, y));
        if (count_matching_pairs(x, y) > 0) { EXPECT_GE(v, 1u); }
    }
    EXPECT_EQ(generalized_basic_approx(letters("ab"), letters("cd"), 5.0, WhpConfig{}, rng), 0u);
}

TEST(GeneralizedBasicApprox, IdenticalStringsBeta16) {
    RngStream rng(11);
    const std::size_t n = 1024;
    int good = 0;
    for (int t = 0; t < 1000; ++t) {
        const auto x = random_symbols(n, 4, rng);
        const auto v = generalized_basic_approx(x, x, 16.0, WhpConfig{}, rng);
        good += v * 16 >= n;
    }
    EXPECT_GE(good, 990);
}

TEST(BasicDecision, Examples) {
    RngStream rng(12);
    const auto x = random_symbols(100, 4, rng);
    EXPECT_EQ(basic_decision(x, hs_preprocess(x), x.size(), WhpConfig{}, rng), Decision::kAtLeast);
    EXPECT_EQ(basic_decision(letters("aaa"), hs_preprocess(letters("bbb")), 1, WhpConfig{}, rng),
              Decision::kLess);
    EXPECT_EQ(basic_decision(x, hs_preprocess(x), x.size() + 1, WhpConfig{}, rng), Decision::kLess);
    EXPECT_THROW(basic_decision(x, hs_preprocess(x), 0, WhpConfig{}, rng), std::invalid_argument);
}

TEST(BasicDecision, ThresholdsAroundL) {
    RngStream rng(13);
    int geq_at_l = 0;
    int lt_above = 0;
    const int trials = 1000;
    for (int t = 0; t < trials; ++t) {
        const auto x = random_symbols(512, 4, rng);
        const auto y = random_symbols(512, 4, rng);
        const std::size_t L = lcs_length(x, y);
        const auto idx = hs_preprocess(y);
        geq_at_l += basic_decision(x, idx, L, WhpConfig{}, rng) == Decision::kAtLeast;
        lt_above += basic_decision(x, idx, L + 1, WhpConfig{}, rng) == Decision::kLess;
    }
    EXPECT_GE(geq_at_l, 990);
    EXPECT_EQ(lt_above, trials);
}

TEST(BasicDecision, NeverFalsePositive) {
    WhpConfig cfg;
    cfg.c = 1;
    RngStream rng(14);
    for (int t = 0; t < 500; ++t) {
        const auto x = random_symbols(rng.uniform_int(1, 400), 3, rng);
        const auto y = random_symbols(rng.uniform_int(1, 400), 3, rng);
        const std::size_t L = lcs_length(x, y);
        const auto ell = static_cast<std::size_t>(rng.uniform_int(1, 400));
        if (basic_decision(x, hs_preprocess(y), ell, cfg, rng) == Decision::kAtLeast) {
            EXPECT_GE(L, ell);
        }
    }
}

}  // namespace
}  // namespace approxlcs
