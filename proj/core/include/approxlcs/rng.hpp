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

#pragma once

#include <cmath>
#include <cstdint>
#include <limits>

namespace approxlcs {

/// Counter-based random stream. Draw number k of a stream is a pure function
/// of (seed, k), so a stream can be resumed from any recorded position and
/// independent sub-streams can be split off by id without sharing state.
///
/// The distributions are implemented here rather than through <random> so
/// that draws are identical across standard library implementations.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed, std::uint64_t position = 0)
        : seed_(seed), position_(position) {}

    std::uint64_t seed() const { return seed_; }
    std::uint64_t position() const { return position_; }

    std::uint64_t next_u64() {
        return mix(seed_ + kGamma * (++position_));
    }

    /// Uniform in [0, 1) with 53 bits of resolution.
    double uniform01() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform integer in [lo, hi] (inclusive); unbiased.
    std::uint64_t uniform_int(std::uint64_t lo, std::uint64_t hi) {
        const std::uint64_t span = hi - lo;
        if (span == std::numeric_limits<std::uint64_t>::max()) return next_u64();
        const std::uint64_t range = span + 1;
        // Lemire's multiply-shift with rejection.
        unsigned __int128 m = static_cast<unsigned __int128>(next_u64()) * range;
        auto low = static_cast<std::uint64_t>(m);
        if (low < range) {
            const std::uint64_t threshold = (0 - range) % range;
            while (low < threshold) {
                m = static_cast<unsigned __int128>(next_u64()) * range;
                low = static_cast<std::uint64_t>(m);
            }
        }
        return lo + static_cast<std::uint64_t>(m >> 64);
    }

    bool bernoulli(double p) {
        if (p >= 1.0) return true;
        if (p <= 0.0) return false;
        return uniform01() < p;
    }

    /// Number of Bernoulli(p) trials up to and including the first success,
    /// supported on {1, 2, ...}. Saturates at the maximum uint64 value.
    std::uint64_t geometric(double p) {
        if (p >= 1.0) return 1;
        if (p <= 0.0) return std::numeric_limits<std::uint64_t>::max();
        const double u = 1.0 - uniform01();  // (0, 1]
        const double g = std::floor(std::log(u) / std::log1p(-p));
        if (!(g < 1.8e19)) return std::numeric_limits<std::uint64_t>::max();
        return static_cast<std::uint64_t>(g) + 1;
    }

    /// Independent child stream keyed by `stream_id`; does not advance this one.
    RngStream split(std::uint64_t stream_id) const {
        return RngStream(mix(seed_ ^ mix(stream_id + 0x6a09e667f3bcc909ULL)));
    }

private:
    static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

    // SplitMix64 finalizer.
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t seed_;
    std::uint64_t position_;
};

}  // namespace approxlcs
