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


#include "approxlcs/approx.hpp"

#include <algorithm>
#include <functional>
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <tuple>
#include <stdexcept>
#include <utility>

#include "approxlcs/blocks.hpp"
#include "approxlcs/exact_lcs.hpp"

namespace approxlcs {

namespace {

constexpr std::uint64_t kMaxSteps = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > kMaxSteps / a) return kMaxSteps;
    return a * b;
}

std::uint64_t ceil_u64(double v) {
    if (!(v > 0.0)) return 0;
    if (v >= 1.8e19) return kMaxSteps;
    return static_cast<std::uint64_t>(std::ceil(v));
}

struct RankedBlock {
    std::uint32_t L;
    std::uint32_t i;
    std::uint32_t j;
};

// Deterministic per-instance data shared by every call on (x, y, T).
class Instance {
public:
    Instance(SymbolView x, SymbolView y, std::uint64_t T, const ApproxConfig& cfg)
        : x(x), y(y), T(T), n(std::max(x.size(), y.size())) {
        check_time_budget(n, T);
        whp = cfg.whp;
        whp.problem_size = whp.log_base(n);
        if (n == 0) return;
        grid = split_blocks(x, y, T);
        M = count_matching_pairs(x, y);
        boost = 8.0 * whp.c * log2p1(whp.problem_size);
        shortcuts = cfg.exact_shortcuts && static_cast<double>(grid.m) <= boost;
        block_index_.resize(grid.k);
    }

    SymbolView x, y;
    std::uint64_t T;
    std::size_t n;
    WhpConfig whp;
    BlockGrid grid;
    std::uint64_t M = 0;
    double boost = 0.0;
    // True when every block decision would run on the exact path and the
    // caller allowed exact answers to be shared.
    bool shortcuts = false;
    std::optional<std::uint64_t> alg1_exact;

    std::size_t K() const { return grid.k; }

    const HSIndex& full_index(BudgetMeter* meter) {
        if (!full_index_) {
            charge(meter, y.size() + 1);
            full_index_.emplace(y);
        }
        return *full_index_;
    }

    const HSIndex& block_index(std::size_t j, BudgetMeter* meter) {
        if (!block_index_[j]) {
            charge(meter, grid.blocks_y[j].size() + 1);
            block_index_[j].emplace(grid.blocks_y[j]);
        }
        return *block_index_[j];
    }

    const LayeredGraph& graph(BudgetMeter* meter) {
        if (!graph_) {
            charge(meter, x.size() + y.size() + 1);
            graph_.emplace(build_layered_graph(grid.blocks_x, grid.blocks_y));
        }
        return *graph_;
    }

    // Exact L_ij for every block; only valid when `shortcuts` holds.
    void fill(BudgetMeter* meter) {
        if (filled_) return;
        const std::size_t k = K();
        diag_sum_.assign(k == 0 ? 0 : 2 * k - 1, 0);
        ranked_.clear();
        for (std::size_t i = 0; i < k; ++i) {
            if (grid.blocks_x[i].empty()) continue;
            for (std::size_t j = 0; j < k; ++j) {
                if (grid.blocks_y[j].empty()) continue;
                const std::size_t L = hs_query(grid.blocks_x[i], block_index(j, meter), meter);
                if (L == 0) continue;
                ranked_.push_back({static_cast<std::uint32_t>(L), static_cast<std::uint32_t>(i),
                                   static_cast<std::uint32_t>(j)});
                diag_sum_[i + k - 1 - j] += L;
            }
        }
        std::sort(ranked_.begin(), ranked_.end(), [](const RankedBlock& a, const RankedBlock& b) {
            return std::tie(b.L, a.i, a.j) < std::tie(a.L, b.i, b.j);
        });
        max_diag_ = diag_sum_.empty() ? 0 : *std::max_element(diag_sum_.begin(), diag_sum_.end());
        filled_ = true;
    }

    bool filled() const { return filled_; }

    // Blocks with L_ij >= t form a prefix of ranked().
    std::size_t count_at_least(std::uint64_t t) const {
        return static_cast<std::size_t>(
            std::partition_point(ranked_.begin(), ranked_.end(),
                                 [t](const RankedBlock& b) { return b.L >= t; }) -
            ranked_.begin());
    }
    const std::vector<RankedBlock>& ranked() const { return ranked_; }
    std::uint64_t diag_sum(std::size_t i, std::size_t j) const {
        return diag_sum_[i + K() - 1 - j];
    }
    std::uint64_t max_diag() const { return max_diag_; }

private:
    std::optional<HSIndex> full_index_;
    std::vector<std::optional<HSIndex>> block_index_;
    std::optional<LayeredGraph> graph_;
    bool filled_ = false;
    std::vector<RankedBlock> ranked_;
    std::vector<std::uint64_t> diag_sum_;
    std::uint64_t max_diag_ = 0;
};

struct Candidate {
    double m_tilde;
    std::uint32_t i;
    std::uint32_t j;
};

// Randomized data drawn once per relaxed run and shared by its guesses.
class RunState {
public:
    explicit RunState(RngStream rng) : rng_(rng) {}

    const SparseBlockMatrix<double>& m_tilde(Instance& inst, BudgetMeter* meter) {
        if (!m_tilde_) {
            const double q = static_cast<double>(inst.M) / static_cast<double>(inst.T);
            m_tilde_.emplace(estimate_block_matching_pairs(inst.graph(meter), q, inst.whp, rng_,
                                                           meter));
        }
        return *m_tilde_;
    }

    // Blocks with L_ij >= thr, ascending by estimated matching pairs.
    const std::vector<Candidate>& candidates(Instance& inst, std::uint64_t thr,
                                             BudgetMeter* meter) {
        auto it = candidates_.find(thr);
        if (it != candidates_.end()) return it->second;
        const auto& est = m_tilde(inst, meter);
        const std::size_t count = inst.count_at_least(thr);
        charge(meter, count + 1);
        std::vector<Candidate> out;
        out.reserve(count);
        for (std::size_t r = 0; r < count; ++r) {
            const auto& b = inst.ranked()[r];
            out.push_back({est.at(b.i, b.j), b.i, b.j});
        }
        std::sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) {
            return std::tie(a.m_tilde, a.i, a.j) < std::tie(b.m_tilde, b.i, b.j);
        });
        return candidates_.emplace(thr, std::move(out)).first->second;
    }

    // Longest block sequence among the first `prefix` candidates.
    std::uint64_t chain(Instance& inst, std::uint64_t thr, std::size_t prefix,
                        BudgetMeter* meter) {
        const auto key = std::make_pair(thr, prefix);
        auto it = chains_.find(key);
        if (it != chains_.end()) return it->second;
        const auto& cands = candidates(inst, thr, meter);
        std::vector<BlockEstimates::Entry> entries;
        entries.reserve(prefix);
        for (std::size_t r = 0; r < prefix; ++r) entries.push_back({cands[r].i, cands[r].j, 1});
        charge(meter, prefix + 1);
        const auto value = sparse_block_sequence_dp(BlockEstimates(inst.K(), std::move(entries)));
        chains_.emplace(key, value);
        return value;
    }

private:
    RngStream rng_;
    std::optional<SparseBlockMatrix<double>> m_tilde_;
    std::map<std::uint64_t, std::vector<Candidate>> candidates_;
    std::map<std::pair<std::uint64_t, std::size_t>, std::uint64_t> chains_;
};

std::uint64_t run_algorithm1(Instance& inst, RngStream& rng, BudgetMeter* meter) {
    if (inst.n == 0) return 0;
    charge(meter, inst.x.size() + inst.y.size() + 1);
    if (inst.M == 0) return 0;
    const auto single = single_symbol_lcs(inst.x, inst.y);
    const double beta =
        std::max(1.0, static_cast<double>(inst.M) / (2.0 * static_cast<double>(inst.T)));
    std::uint64_t approx = 0;
    if (inst.shortcuts && inst.alg1_exact && beta <= inst.boost) {
        charge(meter, 1);
        approx = *inst.alg1_exact;
    } else {
        approx = generalized_basic_approx(inst.x, inst.full_index(meter), beta, inst.whp, rng,
                                          meter);
        if (beta <= inst.boost) inst.alg1_exact = approx;
    }
    return std::max<std::uint64_t>(single.length, approx);
}

std::uint64_t run_algorithm2(Instance& inst, const ApproxConfig& cfg, RngStream& rng,
                             BudgetMeter* meter) {
    if (inst.n == 0) return 0;
    charge(meter, inst.x.size() + inst.y.size() + 1);
    if (inst.M == 0) return 0;
    const double q = static_cast<double>(inst.M) / (4.0 * static_cast<double>(inst.T));
    const auto combine = cfg.median_variant ? RepetitionCombine::kMedian : RepetitionCombine::kMax;
    const auto est = blockwise_single_symbol(inst.graph(meter), q, inst.whp, rng, meter, combine);
    charge(meter, est.nonzeros() + 1);
    return sparse_block_sequence_dp(est);
}

std::uint64_t diagonal_estimate(Instance& inst, std::size_t i0, std::size_t j0, double beta,
                                RngStream& rng, BudgetMeter* meter) {
    const std::size_t k = inst.K();
    const auto d = static_cast<std::ptrdiff_t>(i0) - static_cast<std::ptrdiff_t>(j0);
    if (inst.shortcuts && inst.filled() && beta <= inst.boost) {
        charge(meter, k - static_cast<std::size_t>(d < 0 ? -d : d));
        return inst.diag_sum(i0, j0);
    }
    std::uint64_t total = 0;
    for (const auto& [i, j] : diagonal_blocks(k, d)) {
        if (inst.grid.blocks_x[i].empty() || inst.grid.blocks_y[j].empty()) continue;
        total += generalized_basic_approx(inst.grid.blocks_x[i], inst.block_index(j, meter), beta,
                                          inst.whp, rng, meter);
    }
    return total;
}

std::uint64_t run_algorithm3(Instance& inst, const GuessTriple& guess, const ApproxConfig& cfg,
                             RngStream& rng, BudgetMeter* meter) {
    if (inst.n == 0) return 0;
    charge(meter, inst.x.size() + inst.y.size() + 1);
    if (inst.M == 0) return 0;
    const std::uint64_t escape = 1;
    const std::size_t k = inst.K();
    const double T = static_cast<double>(inst.T);
    const double beta = std::max(1.0, static_cast<double>(guess.mu) / T);
    const double cells = static_cast<double>(k) * static_cast<double>(k);
    const double lg = log2p1(inst.whp.problem_size);
    const bool fast = inst.shortcuts && inst.filled();
    const std::uint64_t ceiling = fast ? std::max(escape, inst.max_diag()) : kMaxSteps;

    std::uint64_t g0 = 1;
    while (static_cast<double>(g0) < static_cast<double>(guess.lambda) / (4.0 * T)) g0 *= 2;

    std::uint64_t best = escape;
    const unsigned reps = repetitions(inst.whp, inst.n);
    for (unsigned rep = 0; rep < reps && best < ceiling; ++rep) {
        RngStream r = rng.split(rep);
        for (std::uint64_t g = g0; g <= inst.grid.m && best < ceiling; g *= 2) {
            const double p = std::min(1.0, cfg.block_sample_constant * static_cast<double>(g) * T *
                                               lg * lg /
                                               (static_cast<double>(guess.lambda) * cells));
            std::optional<std::pair<std::size_t, std::size_t>> seed;
            if (fast) {
                charge(meter, ceil_u64(p * cells) + 1);
                const std::size_t good = inst.count_at_least(g);
                if (good == 0) continue;
                const double hit =
                    p >= 1.0 ? 1.0 : -std::expm1(static_cast<double>(good) * std::log1p(-p));
                if (!r.bernoulli(hit)) continue;
                const auto& b = inst.ranked()[r.uniform_int(0, good - 1)];
                seed.emplace(b.i, b.j);
            } else {
                const std::uint64_t total = static_cast<std::uint64_t>(k) * k;
                std::uint64_t successes = 0;
                std::uint64_t pos = r.geometric(p);
                while (pos <= total) {
                    const std::size_t i = (pos - 1) / k;
                    const std::size_t j = (pos - 1) % k;
                    charge(meter, 1);
                    const auto& bx = inst.grid.blocks_x[i];
                    if (!bx.empty() && !inst.grid.blocks_y[j].empty() &&
                        basic_decision(bx, inst.block_index(j, meter), g, inst.whp, r, meter) ==
                            Decision::kAtLeast) {
                        // Reservoir of size one: uniform over successes.
                        if (r.uniform_int(1, ++successes) == 1) seed.emplace(i, j);
                    }
                    const std::uint64_t skip = r.geometric(p);
                    if (skip > total) break;
                    pos += skip;
                }
            }
            if (!seed) continue;
            best = std::max(best, diagonal_estimate(inst, seed->first, seed->second, beta, r, meter));
        }
    }
    return best;
}

std::uint64_t alg4_threshold(const Instance& inst, const GuessTriple& guess) {
    const double raw = static_cast<double>(guess.L) / (4.0 * std::sqrt(static_cast<double>(inst.T)));
    return std::max<std::uint64_t>(1, ceil_u64(raw - 1e-12));
}

double alg4_probability(const Instance& inst, const GuessTriple& guess) {
    const double L = static_cast<double>(guess.L);
    const double T = static_cast<double>(inst.T);
    const double n = static_cast<double>(inst.n);
    const double lam = static_cast<double>(guess.lambda);
    const double mu = static_cast<double>(guess.mu);
    return std::min({1.0, L / n, L * T / (lam * n), L * L * T / (lam * mu * n)});
}

double alg4_filter(const Instance& inst, const GuessTriple& guess) {
    return 64.0 * static_cast<double>(guess.mu) * static_cast<double>(inst.n) /
           (static_cast<double>(guess.L) * std::sqrt(static_cast<double>(inst.T)));
}

// Upper bound on the fast-path result of a guess, or nullopt when unknown.
std::optional<std::uint64_t> alg4_ceiling(Instance& inst, RunState& run, const GuessTriple& guess,
                                          BudgetMeter* meter) {
    if (!(inst.shortcuts && inst.filled()) || inst.M == 0) return std::nullopt;
    const std::uint64_t thr = alg4_threshold(inst, guess);
    if (thr > inst.grid.m) return 0;
    const auto& cands = run.candidates(inst, thr, meter);
    const double bound = alg4_filter(inst, guess);
    const auto prefix = static_cast<std::size_t>(
        std::partition_point(cands.begin(), cands.end(),
                             [bound](const Candidate& c) { return c.m_tilde <= bound; }) -
        cands.begin());
    return thr * run.chain(inst, thr, prefix, meter);
}

// Longest chain strictly increasing in both coordinates among `cells`
// (block DP with all values 1): bucket by row, then patience sorting on
// columns with each row visited in descending column order.
std::uint64_t unit_chain_length(std::size_t k,
                                std::vector<std::pair<std::uint32_t, std::uint32_t>>& cells) {
    std::vector<std::uint32_t> start(k + 1, 0);
    for (const auto& c : cells) ++start[c.first + 1];
    for (std::size_t i = 0; i < k; ++i) start[i + 1] += start[i];
    std::vector<std::uint32_t> cols(cells.size());
    std::vector<std::uint32_t> fill(start.begin(), start.end() - 1);
    for (const auto& c : cells) cols[fill[c.first]++] = c.second;
    std::vector<std::uint32_t> tails;
    for (std::size_t i = 0; i < k; ++i) {
        const auto row_begin = cols.begin() + start[i];
        const auto row_end = cols.begin() + start[i + 1];
        std::sort(row_begin, row_end, std::greater<>());
        for (auto it = row_begin; it != row_end; ++it) {
            const auto slot = std::lower_bound(tails.begin(), tails.end(), *it);
            if (slot == tails.end()) tails.push_back(*it);
            else *slot = *it;
        }
    }
    return tails.size();
}

std::uint64_t run_algorithm4(Instance& inst, RunState& run, const GuessTriple& guess,
                             RngStream& rng, BudgetMeter* meter) {
    if (inst.n == 0) return 0;
    charge(meter, inst.x.size() + inst.y.size() + 1);
    if (inst.M == 0) return 0;
    const std::size_t k = inst.K();
    const std::uint64_t thr = alg4_threshold(inst, guess);
    const double p = alg4_probability(inst, guess);
    const double bound = alg4_filter(inst, guess);
    const double cells = static_cast<double>(k) * static_cast<double>(k);

    if (inst.shortcuts && inst.filled()) {
        charge(meter, ceil_u64(p * cells) + 1);
        if (thr > inst.grid.m) return 0;
        const auto& cands = run.candidates(inst, thr, meter);
        const auto prefix = static_cast<std::size_t>(
            std::partition_point(cands.begin(), cands.end(),
                                 [bound](const Candidate& c) { return c.m_tilde <= bound; }) -
            cands.begin());
        if (prefix == 0) return 0;
        if (p >= 1.0) return thr * run.chain(inst, thr, prefix, meter);
        std::vector<std::pair<std::uint32_t, std::uint32_t>> hits;
        std::uint64_t pos = rng.geometric(p);
        while (pos <= prefix) {
            hits.emplace_back(cands[pos - 1].i, cands[pos - 1].j);
            const std::uint64_t skip = rng.geometric(p);
            if (skip > prefix) break;
            pos += skip;
        }
        charge(meter, hits.size() * (1 + ceil_log2p1(k)) + 1);
        return thr * unit_chain_length(k, hits);
    }

    const auto& est = run.m_tilde(inst, meter);
    std::vector<std::uint64_t> values(k * k, 0);
    const std::uint64_t total = static_cast<std::uint64_t>(k) * k;
    std::uint64_t pos = rng.geometric(p);
    while (pos <= total) {
        const std::size_t i = (pos - 1) / k;
        const std::size_t j = (pos - 1) % k;
        charge(meter, 1);
        const auto& bx = inst.grid.blocks_x[i];
        if (!bx.empty() && !inst.grid.blocks_y[j].empty() && est.at(i, j) <= bound &&
            basic_decision(bx, inst.block_index(j, meter), thr, inst.whp, rng, meter) ==
                Decision::kAtLeast) {
            values[i * k + j] = thr;
        }
        const std::uint64_t skip = rng.geometric(p);
        if (skip > total) break;
        pos += skip;
    }
    charge(meter, total + 1);
    return block_sequence_dp(values, k);
}

std::uint64_t call_limit(const Instance& inst, const ApproxConfig& cfg) {
    return sat_mul(sat_mul(cfg.abort_multiplier, inst.T), ceil_log2p1(inst.n));
}

GuessingOutcome run_guessing(Instance& inst, RunState& run, const ApproxConfig& cfg,
                             RngStream& rng, BudgetMeter* meter) {
    GuessingOutcome out;
    if (inst.n == 0 || inst.M == 0) return out;
    const auto grid = guess_grid(inst.n);
    const std::uint64_t limit = call_limit(inst, cfg);
    const bool fast = inst.shortcuts && inst.filled();
    const std::uint64_t alg3_ceiling = fast ? std::max<std::uint64_t>(1, inst.max_diag()) : kMaxSteps;

    // The estimates do not depend on the guess; draw them once per run.
    run.m_tilde(inst, meter);

    auto guarded = [&](auto&& body) -> std::uint64_t {
        BudgetMeter call(limit, meter);
        try {
            return body(call);
        } catch (const BudgetExhausted&) {
            ++out.aborted;
            return 0;
        }
    };

    for (std::size_t g = 0; g < grid.size(); ++g) {
        if (meter != nullptr && meter->exhausted()) {
            out.aborted += 2 * (grid.size() - g);
            break;
        }
        const GuessTriple& guess = grid[g];
        // Algorithm 3 ignores the L guess: run it once per (lambda, mu).
        if (guess.L == 1 && out.algorithm3 < alg3_ceiling) {
            RngStream r = rng.split(2 * g);
            out.algorithm3 = std::max(out.algorithm3, guarded([&](BudgetMeter& call) {
                return run_algorithm3(inst, guess, cfg, r, &call);
            }));
        }
        RngStream r = rng.split(2 * g + 1);
        out.algorithm4 = std::max(out.algorithm4, guarded([&](BudgetMeter& call) {
            if (auto ceiling = alg4_ceiling(inst, run, guess, &call);
                ceiling && *ceiling <= out.algorithm4) {
                return std::uint64_t{0};
            }
            return run_algorithm4(inst, run, guess, r, &call);
        }));
    }
    return out;
}

ApproxResult run_relaxed(Instance& inst, const ApproxConfig& cfg, RngStream& rng,
                         BudgetMeter* meter) {
    ApproxResult res;
    auto attempt = [&](auto&& body) -> std::uint64_t {
        try {
            return body();
        } catch (const BudgetExhausted&) {
            ++res.aborted;
            return 0;
        }
    };
    RngStream r1 = rng.split(1);
    RngStream r2 = rng.split(2);
    RngStream r3 = rng.split(3);
    RunState run(rng.split(4));
    const std::uint64_t a1 = attempt([&] { return run_algorithm1(inst, r1, meter); });
    const std::uint64_t a2 = attempt([&] { return run_algorithm2(inst, cfg, r2, meter); });
    GuessingOutcome guessing;
    attempt([&] {
        guessing = run_guessing(inst, run, cfg, r3, meter);
        return std::uint64_t{0};
    });
    res.aborted += guessing.aborted;
    res.breakdown[kAlgorithm1] = a1;
    res.breakdown[kAlgorithm2] = a2;
    res.breakdown[kAlgorithm3] = guessing.algorithm3;
    res.breakdown[kAlgorithm4] = guessing.algorithm4;
    for (const auto& [name, v] : res.breakdown) res.estimate = std::max(res.estimate, v);
    res.steps = meter != nullptr ? meter->steps() : 0;
    return res;
}

void prepare(Instance& inst, BudgetMeter* meter) {
    if (inst.shortcuts && inst.n > 0 && inst.M > 0) inst.fill(meter);
}

void merge_into(ApproxResult& acc, const ApproxResult& part) {
    for (const auto& [name, v] : part.breakdown) {
        auto& slot = acc.breakdown[name];
        slot = std::max(slot, v);
    }
    acc.aborted += part.aborted;
    acc.estimate = std::max(acc.estimate, part.estimate);
}

ApproxResult approx_core(SymbolView x, SymbolView y, std::uint64_t T, const ApproxConfig& cfg,
                         RngStream rng, BudgetMeter& top) {
    ApproxResult acc;
    for (const char* name : {kAlgorithm1, kAlgorithm2, kAlgorithm3, kAlgorithm4}) {
        acc.breakdown[name] = 0;
    }
    Instance inst(x, y, T, cfg);
    if (inst.n == 0) return acc;
    const unsigned lg = ceil_log2p1(inst.n);
    try {
        prepare(inst, &top);
    } catch (const BudgetExhausted&) {
        ++acc.aborted;
        return acc;
    }
    const std::uint64_t rep_limit = sat_mul(sat_mul(sat_mul(cfg.abort_multiplier, T), lg), lg) /
                                    2 * lg;
    const unsigned reps = 2 * lg;
    for (unsigned rep = 0; rep < reps; ++rep) {
        if (top.exhausted()) {
            acc.aborted += reps - rep;
            break;
        }
        BudgetMeter meter(rep_limit, &top);
        RngStream r = rng.split(rep);
        merge_into(acc, run_relaxed(inst, cfg, r, &meter));
    }
    return acc;
}

}  // namespace

std::vector<GuessTriple> guess_grid(std::size_t n) {
    const unsigned lg = n <= 1 ? 0 : static_cast<unsigned>(std::bit_width(n - 1));
    std::vector<GuessTriple> out;
    out.reserve(static_cast<std::size_t>(lg + 1) * (2 * lg + 1) * (2 * lg + 1));
    for (unsigned i = 0; i <= lg; ++i) {
        for (unsigned j = 0; j <= 2 * lg; ++j) {
            for (unsigned k = 0; k <= 2 * lg; ++k) {
                out.push_back({std::uint64_t{1} << i, std::uint64_t{1} << j, std::uint64_t{1} << k});
            }
        }
    }
    return out;
}

std::uint64_t algorithm1(SymbolView x, SymbolView y, std::uint64_t T, const ApproxConfig& cfg,
                         RngStream& rng, BudgetMeter* meter) {
    Instance inst(x, y, T, cfg);
    return run_algorithm1(inst, rng, meter);
}

std::uint64_t algorithm2(SymbolView x, SymbolView y, std::uint64_t T, const ApproxConfig& cfg,
                         RngStream& rng, BudgetMeter* meter) {
    Instance inst(x, y, T, cfg);
    return run_algorithm2(inst, cfg, rng, meter);
}

std::uint64_t algorithm3(SymbolView x, SymbolView y, std::uint64_t T, const GuessTriple& guess,
                         const ApproxConfig& cfg, RngStream& rng, BudgetMeter* meter) {
    Instance inst(x, y, T, cfg);
    prepare(inst, meter);
    return run_algorithm3(inst, guess, cfg, rng, meter);
}

std::uint64_t algorithm4(SymbolView x, SymbolView y, std::uint64_t T, const GuessTriple& guess,
                         const ApproxConfig& cfg, RngStream& rng, BudgetMeter* meter) {
    Instance inst(x, y, T, cfg);
    prepare(inst, meter);
    RunState run(rng.split(0x4d));
    return run_algorithm4(inst, run, guess, rng, meter);
}

GuessingOutcome parameter_guessing(SymbolView x, SymbolView y, std::uint64_t T,
                                   const ApproxConfig& cfg, RngStream& rng, BudgetMeter* meter) {
    Instance inst(x, y, T, cfg);
    prepare(inst, meter);
    RunState run(rng.split(0x4d));
    return run_guessing(inst, run, cfg, rng, meter);
}

ApproxResult approx_lcs_relaxed(SymbolView x, SymbolView y, std::uint64_t T,
                                const ApproxConfig& cfg, RngStream& rng, BudgetMeter* meter) {
    Instance inst(x, y, T, cfg);
    ApproxResult res;
    if (inst.n == 0) {
        for (const char* name : {kAlgorithm1, kAlgorithm2, kAlgorithm3, kAlgorithm4}) {
            res.breakdown[name] = 0;
        }
        return res;
    }
    prepare(inst, meter);
    res = run_relaxed(inst, cfg, rng, meter);
    res.seed = rng.seed();
    return res;
}

ApproxResult approx_lcs(SymbolView x, SymbolView y, std::uint64_t T, const ApproxConfig& cfg,
                        std::uint64_t seed) {
    const std::size_t n = std::max(x.size(), y.size());
    check_time_budget(n, T);
    const unsigned lg = ceil_log2p1(n);
    const std::uint64_t limit =
        sat_mul(sat_mul(sat_mul(sat_mul(sat_mul(cfg.abort_multiplier, T), lg), lg), lg), lg);
    BudgetMeter top(limit);
    RngStream rng(seed);
    ApproxResult res;
    if (!cfg.strict_linear) {
        res = approx_core(x, y, T, cfg, rng, top);
    } else {
        // Pre-subsample with p = 1/ceil(log2(n+1))^3; short answers are covered
        // by any single matching pair.
        const double p = 1.0 / std::pow(static_cast<double>(std::max(1u, lg)), 3.0);
        RngStream rs = rng.split(0x5eed);
        const auto xs = subsample(x, p, rs);
        const auto ys = subsample(y, p, rs);
        std::uint64_t pair = 0;
        std::uint64_t pair_aborted = 0;
        try {
            top.charge(x.size() + y.size() + 1);
            pair = count_matching_pairs(x, y) > 0 ? 1 : 0;
        } catch (const BudgetExhausted&) {
            pair_aborted = 1;
        }
        const std::size_t ns = std::max(xs.size(), ys.size());
        const auto Ts = static_cast<std::uint64_t>(std::clamp<unsigned __int128>(
            T, ns, static_cast<unsigned __int128>(ns) * ns));
        res = approx_core(xs, ys, Ts, cfg, rng.split(0xc0de), top);
        res.breakdown[kMatchingPair] = pair;
        res.estimate = std::max(res.estimate, pair);
        res.aborted += pair_aborted;
    }
    res.steps = top.steps();
    res.seed = seed;
    return res;
}

}  // namespace approxlcs
