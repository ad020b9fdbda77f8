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

#include <stdexcept>
#include <string>

namespace extremal {

// Each failure class maps to one CLI exit code (see cli.hpp).

/// A limit or argument that leaves the statically verified overflow-safe range.
class RangeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Checkpoint failed its integrity check or could not be parsed.
class CorruptCheckpoint : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Checkpoint written by an incompatible format version.
class VersionMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Numerical routine could not satisfy its contract (bracketing, preconditions).
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace extremal
