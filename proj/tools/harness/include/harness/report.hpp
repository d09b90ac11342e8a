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


// Trial records, suite reports and their JSON form.

#pragma once

#include <cstddef>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace approxlcs::harness {

using Json = nlohmann::ordered_json;

/// One estimate compared against the exact oracle when available.
struct TrialRecord {
    std::uint64_t index = 0;
    std::string family;
    std::uint64_t n = 0;
    std::uint64_t T = 0;
    std::optional<std::uint64_t> exact;
    std::uint64_t estimate = 0;
    std::uint64_t steps = 0;
    std::map<std::string, std::uint64_t> breakdown;

    /// exact / estimate; 1 when both are 0; empty without an oracle or when
    /// the estimate is 0 but exact is not.
    std::optional<double> ratio() const;
};

/// A frequency requirement: at least `required` of `total` trials must hit.
struct Check {
    std::string name;
    std::uint64_t hits = 0;
    std::uint64_t total = 0;
    double required = 1.0;
    std::string note;

    void record(bool hit) {
        ++total;
        if (hit) ++hits;
    }
    double frequency() const {
        return total == 0 ? 0.0 : static_cast<double>(hits) / static_cast<double>(total);
    }
    bool passed() const;
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::uint64_t trials = 0;
    std::deque<Check> checks;  // deque: check() hands out stable references
    /// Outputs compared against an exact upper bound, and how many exceeded it.
    std::uint64_t soundness_checked = 0;
    std::uint64_t soundness_violations = 0;
    std::map<std::string, double> metrics;
    std::vector<TrialRecord> records;
    double seconds = 0.0;

    Check& check(const std::string& name, double required = 1.0);
    /// Counts one soundness comparison; returns whether it held.
    bool sound(std::uint64_t estimate, std::uint64_t exact);
    bool passed() const;
};

/// Marks a value to be printed as a fixed 6-decimal JSON number.
Json fixed6(double v);

/// Serializes with fixed6 values rendered as bare numbers.
std::string dump_json(const Json& j, int indent = 2);

Json to_json(const TrialRecord& r);
Json to_json(const SuiteReport& r, bool with_records = true);

/// Median of a sample (upper median for even sizes); 0 for an empty sample.
double median(std::vector<double> values);

}  // namespace approxlcs::harness
