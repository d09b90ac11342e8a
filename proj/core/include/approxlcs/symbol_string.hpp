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

// Dense symbol strings, alphabet remapping and matching-pair counting.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace approxlcs {

using Symbol = std::uint32_t;
using SymbolView = std::span<const Symbol>;

/// A sequence of dense symbol ids in [0, alphabet_size).
class SymbolString {
public:
    SymbolString() = default;

    /// Takes ownership of `symbols`. Throws std::invalid_argument if any id is
    /// not below `alphabet_size`.
    SymbolString(std::vector<Symbol> symbols, std::uint32_t alphabet_size);

    /// Builds a string whose alphabet size is one past the largest id.
    static SymbolString from_ids(std::vector<Symbol> symbols);

    std::size_t size() const { return symbols_.size(); }
    bool empty() const { return symbols_.empty(); }
    std::uint32_t alphabet_size() const { return alphabet_size_; }

    Symbol operator[](std::size_t i) const { return symbols_[i]; }
    const std::vector<Symbol>& symbols() const { return symbols_; }
    SymbolView view() const { return symbols_; }
    operator SymbolView() const { return symbols_; }  // NOLINT

    /// Contiguous piece [begin, begin + length) sharing this alphabet.
    SymbolString substr(std::size_t begin, std::size_t length) const;

    auto begin() const { return symbols_.begin(); }
    auto end() const { return symbols_.end(); }

    friend bool operator==(const SymbolString&, const SymbolString&) = default;

private:
    std::vector<Symbol> symbols_;
    std::uint32_t alphabet_size_ = 0;
};

/// Result of remapping a pair of raw token sequences into one dense id space.
struct RemappedPair {
    SymbolString x;
    SymbolString y;
    /// symbol_map[id] is the raw token that received `id`.
    std::vector<std::uint64_t> symbol_map;
};

/// Assigns ids in order of first appearance over the concatenation x·y.
RemappedPair remap_alphabet(std::span<const std::uint64_t> raw_x,
                            std::span<const std::uint64_t> raw_y);

/// Byte convenience: each byte of the input is one token.
RemappedPair remap_alphabet(std::string_view raw_x, std::string_view raw_y);

/// Occurrence counts of each symbol; zero counts are never stored.
class FrequencyTable {
public:
    using Entry = std::pair<Symbol, std::uint64_t>;

    FrequencyTable() = default;
    explicit FrequencyTable(std::vector<Entry> sorted_entries);

    std::uint64_t count(Symbol s) const;
    std::uint64_t total() const;
    std::size_t distinct() const { return entries_.size(); }
    const std::vector<Entry>& entries() const { return entries_; }

    FrequencyTable& operator+=(const FrequencyTable& other);
    friend bool operator==(const FrequencyTable&, const FrequencyTable&) = default;

private:
    std::vector<Entry> entries_;  // ascending by symbol
};

FrequencyTable frequencies(SymbolView s);

/// Dense per-symbol counts, indexed by id; sized to `alphabet_size` (or to the
/// largest id present, whichever is larger).
std::vector<std::uint64_t> dense_frequencies(SymbolView s, std::size_t alphabet_size = 0);

/// M(x, y) = sum over symbols of #(x) * #(y), i.e. |{(i, j) : x[i] = y[j]}|.
std::uint64_t count_matching_pairs(SymbolView x, SymbolView y);

/// True iff `sub` can be obtained from `s` by deleting positions.
bool is_subsequence(SymbolView sub, SymbolView s);

}  // namespace approxlcs
