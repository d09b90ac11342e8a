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

#include <cstdint>
#include <limits>
#include <stdexcept>

namespace approxlcs {

/// Thrown by BudgetMeter::charge once the step limit (own or inherited) is
/// exceeded.
class BudgetExhausted : public std::runtime_error {
public:
    BudgetExhausted() : std::runtime_error("step budget exhausted") {}
};

/// Deterministic step counter. Every charge is forwarded to the parent meter,
/// so a child can never spend more than its ancestors allow. After the first
/// overrun the meter is marked aborted and stops accepting charges.
/// A refused charge is not counted, so steps() never exceeds limit().
class BudgetMeter {
public:
    static constexpr std::uint64_t kUnlimited = std::numeric_limits<std::uint64_t>::max();

    explicit BudgetMeter(std::uint64_t limit = kUnlimited, BudgetMeter* parent = nullptr)
        : limit_(limit), parent_(parent) {}

    BudgetMeter(const BudgetMeter&) = delete;
    BudgetMeter& operator=(const BudgetMeter&) = delete;

    void charge(std::uint64_t steps) {
        if (aborted_) throw BudgetExhausted();
        const std::uint64_t next = (steps > kUnlimited - steps_) ? kUnlimited : steps_ + steps;
        if (next > limit_) {
            aborted_ = true;
            throw BudgetExhausted();
        }
        if (parent_ != nullptr) {
            try {
                parent_->charge(steps);
            } catch (const BudgetExhausted&) {
                aborted_ = true;
                throw;
            }
        }
        steps_ = next;
    }

    std::uint64_t steps() const { return steps_; }
    std::uint64_t limit() const { return limit_; }
    bool aborted() const { return aborted_; }
    /// True if this meter or any ancestor has aborted.
    bool exhausted() const {
        return aborted_ || (parent_ != nullptr && parent_->exhausted());
    }

private:
    std::uint64_t steps_ = 0;
    std::uint64_t limit_;
    BudgetMeter* parent_;
    bool aborted_ = false;
};

/// Charges `meter` if present.
inline void charge(BudgetMeter* meter, std::uint64_t steps) {
    if (meter != nullptr) meter->charge(steps);
}

}  // namespace approxlcs
