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


#include "approxlcs/sampling.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace approxlcs {

std::vector<Symbol> subsample(SymbolView x, double p, RngStream& rng) {
    if (!(p > 0.0) || p > 1.0) throw std::invalid_argument("subsample: p must lie in (0, 1]");
    if (p == 1.0) return {x.begin(), x.end()};
    std::vector<Symbol> out;
    out.reserve(static_cast<std::size_t>(p * static_cast<double>(x.size()) * 1.25) + 8);
    // pos is the 1-based index of the next kept position.
    std::uint64_t pos = rng.geometric(p);
    while (pos <= x.size()) {
        out.push_back(x[pos - 1]);
        const std::uint64_t skip = rng.geometric(p);
        if (skip > x.size()) break;
        pos += skip;
    }
    return out;
}

SymbolString subsample_string(const SymbolString& x, double p, RngStream& rng) {
    return SymbolString(subsample(x.view(), p, rng), x.alphabet_size());
}

BasicApprox basic_approx_query(SymbolView x, const HSIndex& idx, double beta,
                               const WhpConfig& cfg, RngStream& rng, BudgetMeter* meter) {
    if (!(beta >= 1.0)) throw std::invalid_argument("basic_approx_query: beta must be >= 1");
    const std::size_t n = cfg.log_base(std::max(x.size(), idx.y_length()));
    const double boost = 8.0 * cfg.c * log2p1(n);
    if (beta <= boost) {
        return {hs_query(x, idx, meter), true};
    }
    const auto kept = subsample(x, boost / beta, rng);
    charge(meter, kept.size() + 1);
    return {hs_query(kept, idx, meter), false};
}

namespace {

bool has_matching_pair(SymbolView x, const HSIndex& idx, BudgetMeter* meter) {
    std::size_t scanned = 0;
    bool found = false;
    for (Symbol a : x) {
        ++scanned;
        if (!idx.positions(a).empty()) {
            found = true;
            break;
        }
    }
    charge(meter, scanned);
    return found;
}

}  // namespace

std::size_t generalized_basic_approx(SymbolView x, const HSIndex& idx, double beta,
                                     const WhpConfig& cfg, RngStream& rng,
                                     BudgetMeter* meter) {
    const auto approx = basic_approx_query(x, idx, beta, cfg, rng, meter);
    if (approx.length > 0 || approx.exact) return approx.length;
    return has_matching_pair(x, idx, meter) ? 1 : 0;
}

std::size_t generalized_basic_approx(SymbolView x, SymbolView y, double beta,
                                     const WhpConfig& cfg, RngStream& rng,
                                     BudgetMeter* meter) {
    charge(meter, y.size());
    const HSIndex idx(y);
    return generalized_basic_approx(x, idx, beta, cfg, rng, meter);
}

Decision basic_decision(SymbolView x, const HSIndex& idx, std::size_t ell,
                        const WhpConfig& cfg, RngStream& rng, BudgetMeter* meter) {
    if (ell == 0) throw std::invalid_argument("basic_decision: ell must be >= 1");
    const std::size_t n = std::max(x.size(), idx.y_length());
    if (ell > std::min(x.size(), idx.y_length())) return Decision::kLess;
    std::size_t beta = n;
    while (true) {
        const auto approx = basic_approx_query(x, idx, static_cast<double>(beta), cfg, rng, meter);
        if (approx.length >= ell) return Decision::kAtLeast;
        // An exact answer below ell stays below ell for every smaller beta.
        if (approx.exact) return Decision::kLess;
        if (static_cast<double>(approx.length) <=
            static_cast<double>(ell) / static_cast<double>(beta) - 1.0) {
            return Decision::kLess;
        }
        if (beta == 1) return Decision::kLess;
        beta = std::max<std::size_t>(1, beta / 2);
    }
}

}  // namespace approxlcs
