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


#include "approxlcs/exact_lcs.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <string>

namespace approxlcs {

namespace {

void check_cap(std::size_t a, std::size_t b, std::uint64_t cap) {
    const auto cells = static_cast<unsigned __int128>(a) * b;
    if (cells > cap) {
        throw OracleCapExceeded("exact oracle refused: " + std::to_string(a) + " x " +
                                std::to_string(b) + " cells exceeds cap " +
                                std::to_string(cap));
    }
}

std::size_t dp_length(SymbolView x, SymbolView y) {
    if (x.size() < y.size()) std::swap(x, y);
    std::vector<std::uint32_t> row(y.size() + 1, 0);
    for (Symbol a : x) {
        std::uint32_t diag = 0;
        for (std::size_t j = 1; j <= y.size(); ++j) {
            const std::uint32_t up = row[j];
            row[j] = (a == y[j - 1]) ? diag + 1 : std::max(up, row[j - 1]);
            diag = up;
        }
    }
    return row[y.size()];
}

// Two move bits per cell: 1 = diagonal match, 2 = up (drop x[i]), 0 = left.
class MoveTable {
public:
    MoveTable(std::size_t rows, std::size_t cols)
        : cols_(cols), bits_((rows * cols + 3) / 4, 0) {}

    void set(std::size_t i, std::size_t j, unsigned move) {
        const std::size_t c = i * cols_ + j;
        bits_[c / 4] |= static_cast<std::uint8_t>(move << (2 * (c % 4)));
    }
    unsigned get(std::size_t i, std::size_t j) const {
        const std::size_t c = i * cols_ + j;
        return (bits_[c / 4] >> (2 * (c % 4))) & 3u;
    }

private:
    std::size_t cols_;
    std::vector<std::uint8_t> bits_;
};

DpResult dp_with_certificate(SymbolView x, SymbolView y) {
    const std::size_t n = x.size();
    const std::size_t m = y.size();
    MoveTable moves(n, m);
    std::vector<std::uint32_t> prev(m + 1, 0);
    std::vector<std::uint32_t> cur(m + 1, 0);
    for (std::size_t i = 1; i <= n; ++i) {
        cur[0] = 0;
        for (std::size_t j = 1; j <= m; ++j) {
            if (x[i - 1] == y[j - 1]) {
                cur[j] = prev[j - 1] + 1;
                moves.set(i - 1, j - 1, 1);
            } else if (prev[j] >= cur[j - 1]) {
                cur[j] = prev[j];
                moves.set(i - 1, j - 1, 2);
            } else {
                cur[j] = cur[j - 1];
            }
        }
        std::swap(prev, cur);
    }
    DpResult out;
    out.length = prev[m];
    Certificate cert;
    cert.reserve(out.length);
    std::size_t i = n;
    std::size_t j = m;
    while (i > 0 && j > 0) {
        switch (moves.get(i - 1, j - 1)) {
            case 1:
                cert.emplace_back(i - 1, j - 1);
                --i;
                --j;
                break;
            case 2:
                --i;
                break;
            default:
                --j;
                break;
        }
    }
    std::reverse(cert.begin(), cert.end());
    out.certificate = std::move(cert);
    return out;
}

}  // namespace

DpResult lcs_dp(SymbolView x, SymbolView y, bool want_certificate, std::uint64_t cap) {
    check_cap(x.size(), y.size(), cap);
    if (want_certificate) return dp_with_certificate(x, y);
    DpResult out;
    out.length = (x.empty() || y.empty()) ? 0 : dp_length(x, y);
    return out;
}

bool validate_certificate(SymbolView x, SymbolView y, const Certificate& cert) {
    for (std::size_t k = 0; k < cert.size(); ++k) {
        const auto [i, j] = cert[k];
        if (i >= x.size() || j >= y.size() || x[i] != y[j]) return false;
        if (k > 0 && (cert[k - 1].first >= i || cert[k - 1].second >= j)) return false;
    }
    return true;
}

HSIndex::HSIndex(SymbolView y) : y_length_(y.size()) {
    Symbol top = 0;
    for (Symbol s : y) top = std::max(top, s + 1);
    lists_.resize(top);
    for (std::size_t j = 0; j < y.size(); ++j) {
        lists_[y[j]].push_back(static_cast<std::uint32_t>(j + 1));
    }
}

HSIndex hs_preprocess(SymbolView y) { return HSIndex(y); }

std::size_t hs_query(SymbolView x, const HSIndex& idx, BudgetMeter* meter) {
    // thresh[k] = smallest j such that x[1..i] and y[1..j] have a common
    // subsequence of length k; thresh[0] = 0 is the sentinel.
    std::vector<std::uint32_t> thresh{0};
    std::uint64_t pending = 0;
    for (Symbol a : x) {
        const auto& positions = idx.positions(a);
        ++pending;
        if (positions.empty()) continue;
        std::size_t hi = thresh.size();  // search window is [1, hi)
        for (auto it = positions.rbegin(); it != positions.rend(); ++it) {
            const std::uint32_t j = *it;
            auto first = thresh.begin() + 1;
            auto last = thresh.begin() + static_cast<std::ptrdiff_t>(hi);
            const std::size_t k =
                static_cast<std::size_t>(std::lower_bound(first, last, j) - thresh.begin());
            pending += 1 + std::bit_width(hi);
            if (k == thresh.size()) {
                thresh.push_back(j);
            } else {
                thresh[k] = j;
            }
            assert(thresh[k - 1] < thresh[k]);
            assert(k + 1 == thresh.size() || thresh[k] < thresh[k + 1]);
            if (k == 1) {
                // Every smaller j lands at k = 1 as well; the last one wins.
                thresh[1] = positions.front();
                break;
            }
            hi = k;
        }
        if (pending >= 4096) {
            charge(meter, pending);
            pending = 0;
        }
    }
    charge(meter, pending);
    return thresh.size() - 1;
}

}  // namespace approxlcs
