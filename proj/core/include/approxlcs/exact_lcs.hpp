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

// Exact LCS: the quadratic table (used as an oracle) and the Hunt-Szymanski
// threshold algorithm split into a preprocessing and a query phase.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "approxlcs/budget.hpp"
#include "approxlcs/symbol_string.hpp"

namespace approxlcs {

/// Raised when an exact oracle is asked to exceed its configured cell cap.
class OracleCapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultOracleCap = std::uint64_t{1} << 26;

/// Matched index pairs (i, j), 0-based, strictly increasing in both.
using Certificate = std::vector<std::pair<std::size_t, std::size_t>>;

struct DpResult {
    std::size_t length = 0;
    std::optional<Certificate> certificate;
};

/// Classical O(|x||y|) dynamic program. Refuses with OracleCapExceeded when
/// |x|*|y| > cap.
DpResult lcs_dp(SymbolView x, SymbolView y, bool want_certificate = false,
                std::uint64_t cap = kDefaultOracleCap);

/// Convenience: length only.
inline std::size_t lcs_length(SymbolView x, SymbolView y,
                              std::uint64_t cap = kDefaultOracleCap) {
    return lcs_dp(x, y, false, cap).length;
}

/// True iff `cert` is a valid common-subsequence witness of x and y.
bool validate_certificate(SymbolView x, SymbolView y, const Certificate& cert);

/// Per-symbol ascending 1-based positions of a fixed y.
class HSIndex {
public:
    HSIndex() = default;
    explicit HSIndex(SymbolView y);

    std::size_t y_length() const { return y_length_; }

    /// Ascending 1-based positions of `s` in y; empty if `s` does not occur.
    const std::vector<std::uint32_t>& positions(Symbol s) const {
        static const std::vector<std::uint32_t> kEmpty;
        return s < lists_.size() ? lists_[s] : kEmpty;
    }

    /// Number of ids with a (possibly empty) list.
    std::size_t id_bound() const { return lists_.size(); }

private:
    std::vector<std::vector<std::uint32_t>> lists_;
    std::size_t y_length_ = 0;
};

HSIndex hs_preprocess(SymbolView y);

/// Exact L(x, y) in O((|x| + M) log n) against a preprocessed y. Charges
/// positions scanned plus binary-search steps to `meter`.
std::size_t hs_query(SymbolView x, const HSIndex& idx, BudgetMeter* meter = nullptr);

}  // namespace approxlcs
