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

#include "approxlcs/symbol_string.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace approxlcs {

SymbolString::SymbolString(std::vector<Symbol> symbols, std::uint32_t alphabet_size)
    : symbols_(std::move(symbols)), alphabet_size_(alphabet_size) {
    for (Symbol s : symbols_) {
        if (s >= alphabet_size_) {
            throw std::invalid_argument("symbol id " + std::to_string(s) +
                                        " outside alphabet of size " +
                                        std::to_string(alphabet_size_));
        }
    }
}

SymbolString SymbolString::from_ids(std::vector<Symbol> symbols) {
    Symbol top = 0;
    for (Symbol s : symbols) top = std::max(top, s + 1);
    SymbolString out;
    out.symbols_ = std::move(symbols);
    out.alphabet_size_ = top;
    return out;
}

SymbolString SymbolString::substr(std::size_t begin, std::size_t length) const {
    begin = std::min(begin, symbols_.size());
    length = std::min(length, symbols_.size() - begin);
    SymbolString out;
    out.symbols_.assign(symbols_.begin() + static_cast<std::ptrdiff_t>(begin),
                        symbols_.begin() + static_cast<std::ptrdiff_t>(begin + length));
    out.alphabet_size_ = alphabet_size_;
    return out;
}

namespace {

template <typename Token>
RemappedPair remap_impl(std::span<const Token> raw_x, std::span<const Token> raw_y) {
    std::unordered_map<std::uint64_t, Symbol> ids;
    ids.reserve(raw_x.size() + raw_y.size());
    RemappedPair out;

    auto assign = [&](std::span<const Token> raw) {
        std::vector<Symbol> result;
        result.reserve(raw.size());
        for (Token token : raw) {
            const auto key = static_cast<std::uint64_t>(token);
            auto [it, inserted] = ids.try_emplace(key, static_cast<Symbol>(ids.size()));
            if (inserted) out.symbol_map.push_back(key);
            result.push_back(it->second);
        }
        return result;
    };

    auto xs = assign(raw_x);
    auto ys = assign(raw_y);
    const auto alphabet = static_cast<std::uint32_t>(out.symbol_map.size());
    out.x = SymbolString(std::move(xs), alphabet);
    out.y = SymbolString(std::move(ys), alphabet);
    return out;
}

}  // namespace

RemappedPair remap_alphabet(std::span<const std::uint64_t> raw_x,
                            std::span<const std::uint64_t> raw_y) {
    return remap_impl(raw_x, raw_y);
}

RemappedPair remap_alphabet(std::string_view raw_x, std::string_view raw_y) {
    auto as_bytes = [](std::string_view s) {
        return std::span<const unsigned char>(reinterpret_cast<const unsigned char*>(s.data()),
                                              s.size());
    };
    return remap_impl(as_bytes(raw_x), as_bytes(raw_y));
}

FrequencyTable::FrequencyTable(std::vector<Entry> sorted_entries)
    : entries_(std::move(sorted_entries)) {
    std::erase_if(entries_, [](const Entry& e) { return e.second == 0; });
}

std::uint64_t FrequencyTable::count(Symbol s) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), s,
                               [](const Entry& e, Symbol v) { return e.first < v; });
    return (it != entries_.end() && it->first == s) ? it->second : 0;
}

std::uint64_t FrequencyTable::total() const {
    std::uint64_t sum = 0;
    for (const auto& e : entries_) sum += e.second;
    return sum;
}

FrequencyTable& FrequencyTable::operator+=(const FrequencyTable& other) {
    std::vector<Entry> merged;
    merged.reserve(entries_.size() + other.entries_.size());
    auto a = entries_.begin();
    auto b = other.entries_.begin();
    while (a != entries_.end() || b != other.entries_.end()) {
        if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
            merged.push_back(*a++);
        } else if (a == entries_.end() || b->first < a->first) {
            merged.push_back(*b++);
        } else {
            merged.emplace_back(a->first, a->second + b->second);
            ++a;
            ++b;
        }
    }
    entries_ = std::move(merged);
    return *this;
}

std::vector<std::uint64_t> dense_frequencies(SymbolView s, std::size_t alphabet_size) {
    std::size_t top = alphabet_size;
    for (Symbol v : s) top = std::max<std::size_t>(top, std::size_t{v} + 1);
    std::vector<std::uint64_t> counts(top, 0);
    for (Symbol v : s) ++counts[v];
    return counts;
}

FrequencyTable frequencies(SymbolView s) {
    const auto counts = dense_frequencies(s);
    std::vector<FrequencyTable::Entry> entries;
    for (std::size_t v = 0; v < counts.size(); ++v) {
        if (counts[v] != 0) entries.emplace_back(static_cast<Symbol>(v), counts[v]);
    }
    return FrequencyTable(std::move(entries));
}

std::uint64_t count_matching_pairs(SymbolView x, SymbolView y) {
    if (x.empty() || y.empty()) return 0;
    const auto fx = dense_frequencies(x);
    std::uint64_t total = 0;
    for (Symbol v : y) {
        if (v < fx.size()) total += fx[v];
    }
    return total;
}

bool is_subsequence(SymbolView sub, SymbolView s) {
    std::size_t k = 0;
    for (std::size_t i = 0; i < s.size() && k < sub.size(); ++i) {
        if (s[i] == sub[k]) ++k;
    }
    return k == sub.size();
}

}  // namespace approxlcs
