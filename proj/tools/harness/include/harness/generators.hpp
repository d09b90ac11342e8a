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


// Synthetic instance families.

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "approxlcs/rng.hpp"
#include "approxlcs/symbol_string.hpp"

namespace approxlcs::harness {

enum class GeneratorKind { kRandom, kPlanted, kUnaryHeavy, kDiagonalSkew };

struct InstanceSpec {
    GeneratorKind kind = GeneratorKind::kRandom;
    std::size_t n = 1024;
    std::uint32_t alphabet = 4;
    /// kPlanted: length of the common subsequence; must not exceed n.
    std::size_t planted = 0;
    /// kUnaryHeavy: run length (0 picks sqrt(n)).
    std::size_t run = 0;
    /// kDiagonalSkew: per-position substitution probability for y.
    double mutation = 0.1;
};

struct GeneratedInstance {
    SymbolString x;
    SymbolString y;
    /// Guaranteed lower bound on L(x, y).
    std::size_t lower_bound = 0;
};

/// Throws std::invalid_argument for an invalid spec.
GeneratedInstance generate_instance(const InstanceSpec& spec, RngStream& rng);

GeneratorKind parse_generator_kind(std::string_view name);
std::string to_string(GeneratorKind kind);

/// Uniformly random string over [0, alphabet).
SymbolString random_string(std::size_t n, std::uint32_t alphabet, RngStream& rng);

}  // namespace approxlcs::harness
