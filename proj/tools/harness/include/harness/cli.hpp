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


// Command-line front end: exact | approx | decide | bench | gen.

#pragma once

#include <iosfwd>

namespace approxlcs::harness {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitOracleCap = 3;

/// Parses argv and runs one subcommand. Returns the process exit code: 0 on
/// success, 1 on I/O failure or a failing bench suite, 2 on a usage error and
/// 3 when an exact oracle refuses an instance beyond its cap.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace approxlcs::harness
