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

#include <array>
#include <stdexcept>

#include "approxlcs/symbol_string.hpp"
#include "test_util.hpp"

namespace approxlcs {
namespace {

using testing::letters;
using testing::random_symbols;

TEST(SymbolString, RejectsIdsOutsideAlphabet) {
    EXPECT_THROW(SymbolString({0, 3}, 3), std::invalid_argument);
    EXPECT_NO_THROW(SymbolString({0, 2}, 3));
}

TEST(SymbolString, FromIdsSizesAlphabet) {
    const auto s = SymbolString::from_ids({4, 1, 4});
    EXPECT_EQ(s.alphabet_size(), 5u);
    EXPECT_EQ(s.size(), 3u);
}

TEST(SymbolString, SubstrSharesAlphabet) {
    const auto s = letters("abcde", 5);
    const auto t = s.substr(1, 3);
    EXPECT_EQ(t, letters("bcd", 5));
}

TEST(RemapAlphabet, FirstAppearanceOrder) {
    const auto p = remap_alphabet(std::string_view("aba"), std::string_view("bc"));
    EXPECT_EQ(p.x.symbols(), (std::vector<Symbol>{0, 1, 0}));
    EXPECT_EQ(p.y.symbols(), (std::vector<Symbol>{1, 2}));
    EXPECT_EQ(p.x.alphabet_size(), 3u);
    EXPECT_EQ(p.symbol_map, (std::vector<std::uint64_t>{'a', 'b', 'c'}));
}

TEST(RemapAlphabet, EmptyInputs) {
    const auto p = remap_alphabet(std::string_view(""), std::string_view(""));
    EXPECT_TRUE(p.x.empty());
    EXPECT_TRUE(p.y.empty());
    EXPECT_EQ(p.x.alphabet_size(), 0u);
    EXPECT_EQ(p.y.alphabet_size(), 0u);
}

TEST(RemapAlphabet, LargeTokensBecomeDense) {
    const std::array<std::uint64_t, 3> x{900, 900, 7};
    const std::array<std::uint64_t, 1> y{7};
    const auto p = remap_alphabet(x, y);
    EXPECT_EQ(p.x.symbols(), (std::vector<Symbol>{0, 0, 1}));
    EXPECT_EQ(p.y.symbols(), (std::vector<Symbol>{1}));
    EXPECT_EQ(p.x.alphabet_size(), 2u);
}

TEST(Frequencies, Examples) {
    EXPECT_EQ(frequencies(letters("aab")).entries(),
              (std::vector<FrequencyTable::Entry>{{0, 2}, {1, 1}}));
    EXPECT_EQ(frequencies(letters("")).distinct(), 0u);
    const auto z = frequencies(letters("zzzz"));
    EXPECT_EQ(z.count(25), 4u);
    EXPECT_EQ(z.count(0), 0u);
    EXPECT_EQ(z.total(), 4u);
}

TEST(Frequencies, ConcatenationIsPointwiseSum) {
    RngStream rng(11);
    for (int t = 0; t < 200; ++t) {
        const auto a = random_symbols(rng.uniform_int(0, 64), 8, rng);
        const auto b = random_symbols(rng.uniform_int(0, 64), 8, rng);
        std::vector<Symbol> ab = a.symbols();
        ab.insert(ab.end(), b.begin(), b.end());
        FrequencyTable sum = frequencies(a);
        sum += frequencies(b);
        EXPECT_EQ(frequencies(ab), sum);
        EXPECT_EQ(sum.total(), ab.size());
        for (const auto& [s, c] : sum.entries()) EXPECT_GT(c, 0u) << s;
    }
}

TEST(CountMatchingPairs, Examples) {
    EXPECT_EQ(count_matching_pairs(letters("aab"), letters("aba")), 5u);
    EXPECT_EQ(count_matching_pairs(letters("abc"), letters("")), 0u);
    EXPECT_EQ(count_matching_pairs(letters("ab"), letters("cd")), 0u);
}

TEST(CountMatchingPairs, EqualsBruteForce) {
    RngStream rng(12);
    for (int t = 0; t < 300; ++t) {
        const std::uint32_t a = std::array<std::uint32_t, 4>{2, 4, 16, 256}[t % 4];
        const auto x = random_symbols(rng.uniform_int(0, 256), a, rng);
        const auto y = random_symbols(rng.uniform_int(0, 256), a, rng);
        std::uint64_t brute = 0;
        for (Symbol u : x) {
            for (Symbol v : y) brute += (u == v);
        }
        EXPECT_EQ(count_matching_pairs(x, y), brute);
    }
}

TEST(IsSubsequence, Basics) {
    EXPECT_TRUE(is_subsequence(letters("ace"), letters("abcde")));
    EXPECT_FALSE(is_subsequence(letters("aec"), letters("abcde")));
    EXPECT_TRUE(is_subsequence(letters(""), letters("")));
}

}  // namespace
}  // namespace approxlcs
