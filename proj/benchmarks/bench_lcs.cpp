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


#include <benchmark/benchmark.h>

#include "approxlcs/approx.hpp"
#include "approxlcs/exact_lcs.hpp"
#include "approxlcs/sampling.hpp"
#include "harness/generators.hpp"

namespace {

using approxlcs::RngStream;
using approxlcs::SymbolString;
using approxlcs::harness::random_string;

void BM_LcsDp(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    RngStream rng(1);
    const SymbolString x = random_string(n, 4, rng);
    const SymbolString y = random_string(n, 4, rng);
    for (auto _ : state) benchmark::DoNotOptimize(approxlcs::lcs_length(x, y));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_LcsDp)->RangeMultiplier(2)->Range(256, 4096)->Complexity(benchmark::oNSquared);

void BM_HsQuery(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    RngStream rng(2);
    const SymbolString x = random_string(n, 256, rng);
    const SymbolString y = random_string(n, 256, rng);
    const auto idx = approxlcs::hs_preprocess(y);
    for (auto _ : state) benchmark::DoNotOptimize(approxlcs::hs_query(x, idx));
}
BENCHMARK(BM_HsQuery)->RangeMultiplier(4)->Range(256, 16384);

void BM_ApproxLcs(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    RngStream rng(3);
    const SymbolString x = random_string(n, static_cast<std::uint32_t>(state.range(1)), rng);
    const SymbolString y = random_string(n, static_cast<std::uint32_t>(state.range(1)), rng);
    std::uint64_t seed = 0;
    std::uint64_t steps = 0;
    for (auto _ : state) {
        const auto r = approxlcs::approx_lcs(x, y, n, approxlcs::ApproxConfig{}, ++seed);
        steps = r.steps;
        benchmark::DoNotOptimize(r.estimate);
    }
    state.counters["steps"] = static_cast<double>(steps);
}
BENCHMARK(BM_ApproxLcs)
    ->ArgsProduct({{512, 1024, 2048}, {4, 256}})
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
