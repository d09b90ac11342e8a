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


#include "harness/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace approxlcs::harness {

namespace {

// Prefix for strings standing in for fixed-point numbers until dump time.
constexpr char kFixedTag = '\x1f';

}  // namespace

std::optional<double> TrialRecord::ratio() const {
    if (!exact) return std::nullopt;
    if (estimate == 0) return *exact == 0 ? std::optional<double>(1.0) : std::nullopt;
    return static_cast<double>(*exact) / static_cast<double>(estimate);
}

bool Check::passed() const {
    if (total == 0) return false;
    const auto need = static_cast<std::uint64_t>(std::ceil(required * static_cast<double>(total) - 1e-9));
    return hits >= need;
}

Check& SuiteReport::check(const std::string& name, double required) {
    for (auto& c : checks) {
        if (c.name == name) return c;
    }
    checks.push_back(Check{name, 0, 0, required, {}});
    return checks.back();
}

bool SuiteReport::sound(std::uint64_t estimate, std::uint64_t exact) {
    ++soundness_checked;
    if (estimate > exact) {
        ++soundness_violations;
        return false;
    }
    return true;
}

bool SuiteReport::passed() const {
    if (soundness_violations != 0) return false;
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed(); });
}

Json fixed6(double v) {
    if (!std::isfinite(v)) return nullptr;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%c%.6f", kFixedTag, v);
    return std::string(buf);
}

std::string dump_json(const Json& j, int indent) {
    // The tag byte is escaped as \u001f by the serializer; strip the quotes
    // around every tagged string so the digits appear as a number.
    std::string text = j.dump(indent);
    static const std::string open = "\"\\u001f";
    std::string out;
    out.reserve(text.size());
    std::size_t pos = 0;
    while (true) {
        const std::size_t hit = text.find(open, pos);
        if (hit == std::string::npos) break;
        out.append(text, pos, hit - pos);
        const std::size_t close = text.find('"', hit + open.size());
        out.append(text, hit + open.size(), close - hit - open.size());
        pos = close + 1;
    }
    out.append(text, pos, std::string::npos);
    return out;
}

Json to_json(const TrialRecord& r) {
    Json j;
    j["index"] = r.index;
    if (!r.family.empty()) j["family"] = r.family;
    j["n"] = r.n;
    j["T"] = r.T;
    j["estimate"] = r.estimate;
    j["steps"] = r.steps;
    j["breakdown"] = Json::object();
    for (const auto& [k, v] : r.breakdown) j["breakdown"][k] = v;
    if (r.exact) {
        j["exact"] = *r.exact;
        const auto ratio = r.ratio();
        j["ratio"] = ratio ? fixed6(*ratio) : Json(nullptr);
    }
    return j;
}

Json to_json(const SuiteReport& r, bool with_records) {
    Json j;
    j["suite"] = r.suite;
    j["seed"] = r.seed;
    j["trials"] = r.trials;
    j["passed"] = r.passed();
    j["soundness"] = {{"checked", r.soundness_checked}, {"violations", r.soundness_violations}};
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        Json cj;
        cj["name"] = c.name;
        cj["hits"] = c.hits;
        cj["total"] = c.total;
        cj["frequency"] = fixed6(c.frequency());
        cj["required"] = fixed6(c.required);
        cj["passed"] = c.passed();
        if (!c.note.empty()) cj["note"] = c.note;
        checks.push_back(std::move(cj));
    }
    j["checks"] = std::move(checks);
    Json metrics = Json::object();
    for (const auto& [k, v] : r.metrics) metrics[k] = fixed6(v);
    j["metrics"] = std::move(metrics);
    if (with_records && !r.records.empty()) {
        Json recs = Json::array();
        for (const auto& t : r.records) recs.push_back(to_json(t));
        j["records"] = std::move(recs);
    }
    return j;
}

double median(std::vector<double> values) {
    if (values.empty()) return 0.0;
    const std::size_t mid = values.size() / 2;
    std::nth_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid), values.end());
    const double upper = values[mid];
    if (values.size() % 2 == 1) return upper;
    const double lower = *std::max_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid));
    return (lower + upper) / 2.0;
}

}  // namespace approxlcs::harness
