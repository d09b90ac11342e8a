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


#include "approxlcs/matching_pairs.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace approxlcs {

namespace {

struct BucketEdge {
    Symbol sigma;
    std::uint8_t bucket;
    std::uint32_t block;
    friend bool operator<(const BucketEdge& a, const BucketEdge& b) {
        return std::tie(a.sigma, a.bucket, a.block) < std::tie(b.sigma, b.bucket, b.block);
    }
};

std::vector<BucketEdge> bucket_edges(std::span<const SymbolView> blocks) {
    Symbol top = 0;
    for (SymbolView b : blocks) {
        for (Symbol s : b) top = std::max(top, s + 1);
    }
    std::vector<std::uint32_t> counts(top, 0);
    std::vector<Symbol> touched;
    std::vector<BucketEdge> edges;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        for (Symbol s : blocks[i]) {
            if (counts[s]++ == 0) touched.push_back(s);
        }
        for (Symbol s : touched) {
            edges.push_back({s, static_cast<std::uint8_t>(dyadic_bucket(counts[s])),
                             static_cast<std::uint32_t>(i)});
            counts[s] = 0;
        }
        touched.clear();
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

struct Range {
    std::uint8_t bucket;
    std::uint32_t begin, end;
};

// Splits the edges of one symbol, starting at `pos`, into per-bucket ranges.
std::vector<Range> symbol_ranges(const std::vector<BucketEdge>& edges, std::size_t& pos,
                                 Symbol sigma) {
    std::vector<Range> out;
    while (pos < edges.size() && edges[pos].sigma == sigma) {
        const auto bucket = edges[pos].bucket;
        const auto begin = static_cast<std::uint32_t>(pos);
        while (pos < edges.size() && edges[pos].sigma == sigma && edges[pos].bucket == bucket) {
            ++pos;
        }
        out.push_back({bucket, begin, static_cast<std::uint32_t>(pos)});
    }
    return out;
}

double keep_probability(const MiddleNode& v, double q) {
    return std::min(1.0, std::ldexp(8.0, v.l + v.r) / q);
}

// Walks one repetition of the node sample and reports every kept node with
// its keep probability.
template <typename Visit>
void sample_nodes(const LayeredGraph& graph, double q, RngStream& rng, BudgetMeter* meter,
                  SamplingStats* stats, Visit&& visit) {
    const auto& nodes = graph.nodes();
    for (const auto& group : graph.groups()) {
        const double p = keep_probability(nodes[group.front()], q);
        auto take = [&](std::uint32_t id) {
            const MiddleNode& v = nodes[id];
            const std::uint64_t paths = std::uint64_t{v.left_end - v.left_begin} *
                                        (v.right_end - v.right_begin);
            charge(meter, 1 + paths);
            if (stats != nullptr) {
                ++stats->surviving_nodes;
                stats->two_paths += paths;
            }
            visit(v, p);
        };
        if (p >= 1.0) {
            for (std::uint32_t id : group) take(id);
            continue;
        }
        std::uint64_t pos = rng.geometric(p);
        while (pos <= group.size()) {
            take(group[pos - 1]);
            const std::uint64_t skip = rng.geometric(p);
            if (skip > group.size()) break;
            pos += skip;
        }
    }
}

bool fully_deterministic(const LayeredGraph& graph, double q) {
    for (const auto& group : graph.groups()) {
        if (keep_probability(graph.nodes()[group.front()], q) < 1.0) return false;
    }
    return true;
}

template <typename T>
struct KeyedValue {
    std::uint64_t key;
    T value;
};

template <typename T, typename Merge>
void sort_and_merge(std::vector<KeyedValue<T>>& items, Merge&& merge) {
    std::sort(items.begin(), items.end(),
              [](const auto& a, const auto& b) { return a.key < b.key; });
    std::size_t out = 0;
    for (std::size_t k = 0; k < items.size(); ++k) {
        if (out > 0 && items[out - 1].key == items[k].key) {
            items[out - 1].value = merge(items[out - 1].value, items[k].value);
        } else {
            items[out++] = items[k];
        }
    }
    items.resize(out);
}

// Per-repetition accumulator keyed by i * k + j. Small grids use a dense
// array with a touched list; larger ones collect pairs and sort.
template <typename T, typename Merge>
class Accumulator {
public:
    static constexpr std::uint64_t kDenseCells = std::uint64_t{1} << 22;

    Accumulator(std::uint64_t cells, Merge merge) : dense_(cells <= kDenseCells), merge_(merge) {
        if (dense_) values_.assign(cells, T{});
    }

    void add(std::uint64_t key, T v) {
        if (!dense_) {
            items_.push_back({key, v});
            return;
        }
        T& slot = values_[key];
        if (slot == T{}) {
            touched_.push_back(key);
            slot = v;
        } else {
            slot = merge_(slot, v);
        }
    }

    /// Appends one merged pair per key to `out` and resets.
    void drain(std::vector<KeyedValue<T>>& out) {
        if (!dense_) {
            sort_and_merge(items_, merge_);
            out.insert(out.end(), items_.begin(), items_.end());
            items_.clear();
            return;
        }
        for (std::uint64_t key : touched_) {
            out.push_back({key, values_[key]});
            values_[key] = T{};
        }
        touched_.clear();
    }

private:
    bool dense_;
    Merge merge_;
    std::vector<T> values_;
    std::vector<std::uint64_t> touched_;
    std::vector<KeyedValue<T>> items_;
};

// Combines per-repetition sparse values (absent = 0) into one matrix.
template <typename T>
SparseBlockMatrix<T> combine_repetitions(std::vector<KeyedValue<T>> all, std::size_t reps,
                                         std::size_t dimension, RepetitionCombine how) {
    std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
        return a.key < b.key || (a.key == b.key && a.value < b.value);
    });
    using Entry = typename SparseBlockMatrix<T>::Entry;
    std::vector<Entry> entries;
    const auto k = static_cast<std::uint64_t>(dimension);
    for (std::size_t begin = 0; begin < all.size();) {
        std::size_t end = begin;
        while (end < all.size() && all[end].key == all[begin].key) ++end;
        const std::size_t present = end - begin;
        T value{};
        if (how == RepetitionCombine::kMax) {
            value = all[end - 1].value;
        } else {
            // Sorted sample is (reps - present) zeros followed by the values.
            const std::size_t mid = reps / 2;
            const std::size_t zeros = reps - present;
            if (mid >= zeros) value = all[begin + (mid - zeros)].value;
        }
        if (value > T{}) {
            entries.push_back({static_cast<std::uint32_t>(all[begin].key / k),
                               static_cast<std::uint32_t>(all[begin].key % k), value});
        }
        begin = end;
    }
    return SparseBlockMatrix<T>(dimension, std::move(entries));
}

std::size_t grid_dimension(const LayeredGraph& graph) {
    return std::max(graph.left_count(), graph.right_count());
}

std::size_t total_length(std::span<const SymbolView> blocks) {
    std::size_t total = 0;
    for (SymbolView b : blocks) total += b.size();
    return total;
}

void check_q(double q) {
    if (!(q > 0.0)) throw std::invalid_argument("sampling threshold q must be positive");
}

}  // namespace

LayeredGraph build_layered_graph(std::span<const SymbolView> blocks_x,
                                 std::span<const SymbolView> blocks_y) {
    LayeredGraph g;
    g.left_count_ = blocks_x.size();
    g.right_count_ = blocks_y.size();
    g.input_length_ = std::max(total_length(blocks_x), total_length(blocks_y));

    const auto left = bucket_edges(blocks_x);
    const auto right = bucket_edges(blocks_y);
    g.left_ids_.reserve(left.size());
    for (const auto& e : left) g.left_ids_.push_back(e.block);
    g.right_ids_.reserve(right.size());
    for (const auto& e : right) g.right_ids_.push_back(e.block);

    std::size_t a = 0;
    std::size_t b = 0;
    while (a < left.size() && b < right.size()) {
        if (left[a].sigma < right[b].sigma) {
            const Symbol s = left[a].sigma;
            while (a < left.size() && left[a].sigma == s) ++a;
            continue;
        }
        if (right[b].sigma < left[a].sigma) {
            const Symbol s = right[b].sigma;
            while (b < right.size() && right[b].sigma == s) ++b;
            continue;
        }
        const Symbol sigma = left[a].sigma;
        const auto ls = symbol_ranges(left, a, sigma);
        const auto rs = symbol_ranges(right, b, sigma);
        for (const auto& lr : ls) {
            for (const auto& rr : rs) {
                g.nodes_.push_back({sigma, lr.bucket, rr.bucket, lr.begin, lr.end, rr.begin,
                                    rr.end});
            }
        }
    }

    // Group by (l, r); within a group nodes keep ascending symbol order.
    std::vector<std::uint32_t> order(g.nodes_.size());
    for (std::uint32_t id = 0; id < order.size(); ++id) order[id] = id;
    std::stable_sort(order.begin(), order.end(), [&](std::uint32_t u, std::uint32_t v) {
        return std::tie(g.nodes_[u].l, g.nodes_[u].r) < std::tie(g.nodes_[v].l, g.nodes_[v].r);
    });
    for (std::size_t k = 0; k < order.size(); ++k) {
        const auto& v = g.nodes_[order[k]];
        if (k == 0 || v.l != g.nodes_[order[k - 1]].l || v.r != g.nodes_[order[k - 1]].r) {
            g.groups_.emplace_back();
        }
        g.groups_.back().push_back(order[k]);
    }
    return g;
}

SparseBlockMatrix<double> estimate_block_matching_pairs(const LayeredGraph& graph, double q,
                                                        const WhpConfig& cfg, RngStream& rng,
                                                        BudgetMeter* meter,
                                                        SamplingStats* stats) {
    check_q(q);
    const std::size_t dim = grid_dimension(graph);
    const auto k = static_cast<std::uint64_t>(dim);
    const std::size_t reps =
        fully_deterministic(graph, q) ? 1 : repetitions(cfg, cfg.log_base(graph.input_length()));
    std::vector<KeyedValue<double>> all;
    auto sum = [](double u, double v) { return u + v; };
    Accumulator<double, decltype(sum)> acc(k * k, sum);
    for (std::size_t rep = 0; rep < reps; ++rep) {
        RngStream rep_rng = rng.split(rep);
        sample_nodes(graph, q, rep_rng, meter, stats, [&](const MiddleNode& v, double p) {
            const double w = std::ldexp(1.0, v.l + v.r) / p;
            for (std::uint32_t i : graph.left_neighbors(v)) {
                for (std::uint32_t j : graph.right_neighbors(v)) acc.add(i * k + j, w);
            }
        });
        acc.drain(all);
    }
    if (stats != nullptr) stats->repetitions += reps;
    rng = rng.split(reps);
    return combine_repetitions(std::move(all), reps, dim, RepetitionCombine::kMedian);
}

SparseBlockMatrix<double> estimate_block_matching_pairs(std::span<const SymbolView> blocks_x,
                                                        std::span<const SymbolView> blocks_y,
                                                        double q, const WhpConfig& cfg,
                                                        RngStream& rng, BudgetMeter* meter) {
    check_q(q);
    const auto graph = build_layered_graph(blocks_x, blocks_y);
    return estimate_block_matching_pairs(graph, q, cfg, rng, meter);
}

SingleSymbol single_symbol_lcs(SymbolView x, SymbolView y) {
    const auto fx = dense_frequencies(x);
    const auto fy = dense_frequencies(y);
    SingleSymbol best;
    const std::size_t top = std::min(fx.size(), fy.size());
    for (std::size_t s = 0; s < top; ++s) {
        const auto k = static_cast<std::size_t>(std::min(fx[s], fy[s]));
        if (k > best.length) {
            best.length = k;
            best.symbol = static_cast<Symbol>(s);
        }
    }
    return best;
}

SparseBlockMatrix<std::uint64_t> blockwise_single_symbol(const LayeredGraph& graph, double q,
                                                         const WhpConfig& cfg, RngStream& rng,
                                                         BudgetMeter* meter,
                                                         RepetitionCombine combine,
                                                         SamplingStats* stats) {
    check_q(q);
    const std::size_t dim = grid_dimension(graph);
    const auto k = static_cast<std::uint64_t>(dim);
    const std::size_t reps =
        fully_deterministic(graph, q) ? 1 : repetitions(cfg, cfg.log_base(graph.input_length()));
    std::vector<KeyedValue<std::uint64_t>> all;
    std::vector<KeyedValue<std::uint64_t>> rep_items;
    auto take_max = [](std::uint64_t u, std::uint64_t v) { return std::max(u, v); };
    Accumulator<std::uint64_t, decltype(take_max)> acc(k * k, take_max);
    Accumulator<std::uint64_t, decltype(take_max)> best(
        combine == RepetitionCombine::kMax ? k * k : 0, take_max);
    for (std::size_t rep = 0; rep < reps; ++rep) {
        RngStream rep_rng = rng.split(rep);
        sample_nodes(graph, q, rep_rng, meter, stats, [&](const MiddleNode& v, double) {
            const std::uint64_t w = std::uint64_t{1} << std::min(v.l, v.r);
            for (std::uint32_t i : graph.left_neighbors(v)) {
                for (std::uint32_t j : graph.right_neighbors(v)) acc.add(i * k + j, w);
            }
        });
        if (combine == RepetitionCombine::kMax) {
            rep_items.clear();
            acc.drain(rep_items);
            for (const auto& e : rep_items) best.add(e.key, e.value);
        } else {
            acc.drain(all);
        }
    }
    if (combine == RepetitionCombine::kMax) best.drain(all);
    if (stats != nullptr) stats->repetitions += reps;
    rng = rng.split(reps);
    return combine_repetitions(std::move(all), reps, dim, combine);
}

SparseBlockMatrix<std::uint64_t> blockwise_single_symbol(std::span<const SymbolView> blocks_x,
                                                         std::span<const SymbolView> blocks_y,
                                                         double q, const WhpConfig& cfg,
                                                         RngStream& rng, BudgetMeter* meter,
                                                         RepetitionCombine combine) {
    check_q(q);
    const auto graph = build_layered_graph(blocks_x, blocks_y);
    return blockwise_single_symbol(graph, q, cfg, rng, meter, combine);
}

}  // namespace approxlcs
