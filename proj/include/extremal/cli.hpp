// Copyright 2026 The extremal-primes Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace extremal {

/// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,
  kExitCorrupt = 3,
  kExitRange = 4,
};

/// Accepts plain integers, "a^b" and "ae b" forms such as "10^13" or "3e9".
/// Throws std::invalid_argument for malformed or non-integral input and
/// RangeError when the value does not fit in 64 bits.
std::uint64_t parse_limit(const std::string& text);

/// Runs the command line. args excludes the program name.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace extremal
