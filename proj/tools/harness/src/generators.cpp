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


#include "harness/generators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace approxlcs::harness {

namespace {

// k distinct sorted positions out of [0, n) (Floyd's algorithm, then sort).
std::vector<std::size_t> sorted_positions(std::size_t n, std::size_t k, RngStream& rng) {
    std::vector<std::size_t> out;
    if (k >= n) {
        out.resize(n);
        for (std::size_t i = 0; i < n; ++i) out[i] = i;
        return out;
    }
    std::vector<bool> taken(n, false);
    out.reserve(k);
    for (std::size_t j = n - k; j < n; ++j) {
        const auto t = static_cast<std::size_t>(rng.uniform_int(0, j));
        const std::size_t pick = taken[t] ? j : t;
        taken[pick] = true;
        out.push_back(pick);
    }
    std::sort(out.begin(), out.end());
    return out;
}

GeneratedInstance planted(const InstanceSpec& spec, RngStream& rng) {
    if (spec.planted > spec.n) throw std::invalid_argument("planted length exceeds n");
    if (spec.alphabet < 2) throw std::invalid_argument("planted instances need alphabet >= 2");
    const std::uint32_t half = spec.alphabet / 2;
    std::vector<Symbol> x(spec.n);
    std::vector<Symbol> y(spec.n);
    for (auto& s : x) s = static_cast<Symbol>(rng.uniform_int(0, half - 1));
    for (auto& s : y) s = static_cast<Symbol>(rng.uniform_int(half, spec.alphabet - 1));
    std::vector<Symbol> z(spec.planted);
    for (auto& s : z) s = static_cast<Symbol>(rng.uniform_int(0, spec.alphabet - 1));
    const auto px = sorted_positions(spec.n, spec.planted, rng);
    const auto py = sorted_positions(spec.n, spec.planted, rng);
    for (std::size_t t = 0; t < spec.planted; ++t) {
        x[px[t]] = z[t];
        y[py[t]] = z[t];
    }
    return {SymbolString(std::move(x), spec.alphabet), SymbolString(std::move(y), spec.alphabet),
            spec.planted};
}

SymbolString unary_runs(std::size_t n, std::size_t run, std::uint32_t alphabet, RngStream& rng) {
    std::vector<Symbol> s(n);
    for (std::size_t begin = 0; begin < n; begin += run) {
        const auto sym = static_cast<Symbol>(rng.uniform_int(0, alphabet - 1));
        std::fill(s.begin() + static_cast<std::ptrdiff_t>(begin),
                  s.begin() + static_cast<std::ptrdiff_t>(std::min(n, begin + run)), sym);
    }
    return SymbolString(std::move(s), alphabet);
}

}  // namespace

SymbolString random_string(std::size_t n, std::uint32_t alphabet, RngStream& rng) {
    if (alphabet == 0 && n > 0) throw std::invalid_argument("alphabet must be positive");
    std::vector<Symbol> s(n);
    for (auto& v : s) v = static_cast<Symbol>(rng.uniform_int(0, alphabet - 1));
    return SymbolString(std::move(s), alphabet);
}

GeneratedInstance generate_instance(const InstanceSpec& spec, RngStream& rng) {
    if (spec.alphabet == 0) throw std::invalid_argument("alphabet must be positive");
    switch (spec.kind) {
        case GeneratorKind::kRandom:
            return {random_string(spec.n, spec.alphabet, rng), random_string(spec.n, spec.alphabet, rng),
                    0};
        case GeneratorKind::kPlanted:
            return planted(spec, rng);
        case GeneratorKind::kUnaryHeavy: {
            const std::size_t run = spec.run != 0
                                        ? spec.run
                                        : std::max<std::size_t>(
                                              1, static_cast<std::size_t>(std::sqrt(spec.n)));
            return {unary_runs(spec.n, run, spec.alphabet, rng),
                    unary_runs(spec.n, run, spec.alphabet, rng), 0};
        }
        case GeneratorKind::kDiagonalSkew: {
            if (!(spec.mutation >= 0.0 && spec.mutation <= 1.0)) {
                throw std::invalid_argument("mutation rate must lie in [0, 1]");
            }
            auto x = random_string(spec.n, spec.alphabet, rng);
            std::vector<Symbol> y = x.symbols();
            std::size_t kept = 0;
            for (auto& s : y) {
                if (rng.bernoulli(spec.mutation)) {
                    s = static_cast<Symbol>(rng.uniform_int(0, spec.alphabet - 1));
                } else {
                    ++kept;
                }
            }
            return {std::move(x), SymbolString(std::move(y), spec.alphabet), kept};
        }
    }
    throw std::invalid_argument("unknown generator");
}

GeneratorKind parse_generator_kind(std::string_view name) {
    if (name == "random") return GeneratorKind::kRandom;
    if (name == "planted") return GeneratorKind::kPlanted;
    if (name == "unary-heavy") return GeneratorKind::kUnaryHeavy;
    if (name == "diagonal-skew") return GeneratorKind::kDiagonalSkew;
    throw std::invalid_argument("unknown generator kind: " + std::string(name));
}

std::string to_string(GeneratorKind kind) {
    switch (kind) {
        case GeneratorKind::kRandom: return "random";
        case GeneratorKind::kPlanted: return "planted";
        case GeneratorKind::kUnaryHeavy: return "unary-heavy";
        case GeneratorKind::kDiagonalSkew: return "diagonal-skew";
    }
    return "unknown";
}

}  // namespace approxlcs::harness
