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


// Per-block matching-pair estimates and single-symbol lower bounds, built on
// a three-layered graph of (symbol, x-bucket, y-bucket) middle nodes.

#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <tuple>
#include <vector>

#include "approxlcs/budget.hpp"
#include "approxlcs/rng.hpp"
#include "approxlcs/sampling.hpp"
#include "approxlcs/symbol_string.hpp"

namespace approxlcs {

/// k x k matrix listing only its nonzero entries, sorted by (i, j).
template <typename T>
class SparseBlockMatrix {
public:
    struct Entry {
        std::uint32_t i;
        std::uint32_t j;
        T value;
        friend bool operator==(const Entry&, const Entry&) = default;
    };

    SparseBlockMatrix() = default;
    explicit SparseBlockMatrix(std::size_t dimension) : dimension_(dimension) {}

    /// Builds from arbitrary entries; zeros are dropped, duplicates keep the
    /// largest value.
    SparseBlockMatrix(std::size_t dimension, std::vector<Entry> entries)
        : dimension_(dimension), entries_(std::move(entries)) {
        std::sort(entries_.begin(), entries_.end(), [](const Entry& a, const Entry& b) {
            return std::tie(a.i, a.j, b.value) < std::tie(b.i, b.j, a.value);
        });
        std::erase_if(entries_, [](const Entry& e) { return !(e.value > T{}); });
        entries_.erase(std::unique(entries_.begin(), entries_.end(),
                                   [](const Entry& a, const Entry& b) {
                                       return a.i == b.i && a.j == b.j;
                                   }),
                       entries_.end());
    }

    std::size_t dimension() const { return dimension_; }
    std::size_t nonzeros() const { return entries_.size(); }
    const std::vector<Entry>& entries() const { return entries_; }

    T at(std::size_t i, std::size_t j) const {
        auto it = std::lower_bound(entries_.begin(), entries_.end(), std::pair{i, j},
                                   [](const Entry& e, const std::pair<std::size_t, std::size_t>& key) {
                                       return std::pair<std::size_t, std::size_t>{e.i, e.j} < key;
                                   });
        return (it != entries_.end() && it->i == i && it->j == j) ? it->value : T{};
    }

private:
    std::size_t dimension_ = 0;
    std::vector<Entry> entries_;
};

/// Middle node (sigma, l, r): blocks x_i with #sigma(x_i) in [2^l, 2^(l+1))
/// on the left, blocks y_j with #sigma(y_j) in [2^r, 2^(r+1)) on the right.
struct MiddleNode {
    Symbol sigma;
    std::uint8_t l;
    std::uint8_t r;
    std::uint32_t left_begin, left_end;    // range into LayeredGraph::left_ids
    std::uint32_t right_begin, right_end;  // range into LayeredGraph::right_ids
};

class LayeredGraph {
public:
    LayeredGraph() = default;

    std::size_t left_count() const { return left_count_; }
    std::size_t right_count() const { return right_count_; }
    const std::vector<MiddleNode>& nodes() const { return nodes_; }

    std::span<const std::uint32_t> left_neighbors(const MiddleNode& v) const {
        return {left_ids_.data() + v.left_begin, v.left_end - v.left_begin};
    }
    std::span<const std::uint32_t> right_neighbors(const MiddleNode& v) const {
        return {right_ids_.data() + v.right_begin, v.right_end - v.right_begin};
    }

    /// Total length of the larger side; the n of the instance.
    std::size_t input_length() const { return input_length_; }

    /// Node indices grouped by (l, r); groups[g] lists nodes sharing one pair.
    const std::vector<std::vector<std::uint32_t>>& groups() const { return groups_; }

private:
    friend LayeredGraph build_layered_graph(std::span<const SymbolView>,
                                            std::span<const SymbolView>);

    std::size_t left_count_ = 0;
    std::size_t right_count_ = 0;
    std::size_t input_length_ = 0;
    std::vector<MiddleNode> nodes_;
    std::vector<std::uint32_t> left_ids_;
    std::vector<std::uint32_t> right_ids_;
    std::vector<std::vector<std::uint32_t>> groups_;
};

LayeredGraph build_layered_graph(std::span<const SymbolView> blocks_x,
                                 std::span<const SymbolView> blocks_y);

/// Floor of log2 for v >= 1.
inline unsigned dyadic_bucket(std::uint64_t v) {
    return static_cast<unsigned>(std::bit_width(v)) - 1;
}

/// Aggregate counters over all repetitions of one sampling call.
struct SamplingStats {
    std::uint64_t repetitions = 0;
    std::uint64_t surviving_nodes = 0;
    std::uint64_t two_paths = 0;
};

/// Estimates M_ij for all block pairs: each repetition keeps node (sigma,l,r)
/// with probability min(1, 2^(l+r+3)/q) and credits 2^(l+r)/p to every
/// 2-path through it. The output is the per-entry median over repetitions.
/// Requires q > 0.
SparseBlockMatrix<double> estimate_block_matching_pairs(const LayeredGraph& graph, double q,
                                                        const WhpConfig& cfg, RngStream& rng,
                                                        BudgetMeter* meter = nullptr,
                                                        SamplingStats* stats = nullptr);

SparseBlockMatrix<double> estimate_block_matching_pairs(std::span<const SymbolView> blocks_x,
                                                        std::span<const SymbolView> blocks_y,
                                                        double q, const WhpConfig& cfg,
                                                        RngStream& rng,
                                                        BudgetMeter* meter = nullptr);

struct SingleSymbol {
    std::optional<Symbol> symbol;
    std::size_t length = 0;
};

/// argmax over sigma of min(#sigma(x), #sigma(y)); ties go to the smaller id.
SingleSymbol single_symbol_lcs(SymbolView x, SymbolView y);

enum class RepetitionCombine { kMax, kMedian };

/// Per-block single-symbol lower bounds: each repetition credits
/// 2^min(l, r) to the blocks joined by a kept node (maximum per entry); the
/// repetitions are combined by maximum (default) or median. Requires q > 0.
SparseBlockMatrix<std::uint64_t> blockwise_single_symbol(
    const LayeredGraph& graph, double q, const WhpConfig& cfg, RngStream& rng,
    BudgetMeter* meter = nullptr, RepetitionCombine combine = RepetitionCombine::kMax,
    SamplingStats* stats = nullptr);

SparseBlockMatrix<std::uint64_t> blockwise_single_symbol(
    std::span<const SymbolView> blocks_x, std::span<const SymbolView> blocks_y, double q,
    const WhpConfig& cfg, RngStream& rng, BudgetMeter* meter = nullptr,
    RepetitionCombine combine = RepetitionCombine::kMax);

}  // namespace approxlcs
