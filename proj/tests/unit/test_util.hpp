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


#pragma once

#include <string_view>
#include <vector>

#include "approxlcs/rng.hpp"
#include "approxlcs/symbol_string.hpp"

namespace approxlcs::testing {

/// Lower-case letters as ids: 'a' -> 0, 'b' -> 1, ...
inline SymbolString letters(std::string_view s, std::uint32_t alphabet = 26) {
    std::vector<Symbol> out;
    for (char c : s) out.push_back(static_cast<Symbol>(c - 'a'));
    return SymbolString(std::move(out), alphabet);
}

inline SymbolString random_symbols(std::size_t n, std::uint32_t alphabet, RngStream& rng) {
    std::vector<Symbol> out(n);
    for (auto& s : out) s = static_cast<Symbol>(rng.uniform_int(0, alphabet - 1));
    return SymbolString(std::move(out), alphabet);
}

/// Exponential-time LCS by recursion over prefixes; tiny inputs only.
inline std::size_t brute_lcs(SymbolView x, SymbolView y) {
    if (x.empty() || y.empty()) return 0;
    if (x.back() == y.back()) return 1 + brute_lcs(x.first(x.size() - 1), y.first(y.size() - 1));
    const std::size_t a = brute_lcs(x.first(x.size() - 1), y);
    const std::size_t b = brute_lcs(x, y.first(y.size() - 1));
    return a > b ? a : b;
}

}  // namespace approxlcs::testing
