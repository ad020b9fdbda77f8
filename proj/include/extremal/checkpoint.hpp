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
#include <filesystem>
#include <string>

#include "extremal/analysis.hpp"
#include "extremal/hull_engine.hpp"

namespace extremal {

inline constexpr int kCheckpointFormatVersion = 1;

/// Everything needed to continue a hull run from a segment boundary.
struct Checkpoint {
  HullState state;
  /// Sums over the confirmed prefix of state.stack.
  ConjectureSums sums;
  /// Sieve settings of the run that wrote the file; limit is the run target.
  SieveConfig config;

  friend bool operator==(const Checkpoint& a, const Checkpoint& b) {
    return a.state == b.state && a.sums == b.sums && a.config.limit == b.config.limit &&
           a.config.segment_size == b.config.segment_size && a.config.workers == b.config.workers;
  }
};

/// Builds a checkpoint with sums recomputed from the confirmed prefix.
Checkpoint make_checkpoint(const HullState& state, const SieveConfig& config);

/// Canonical JSON text, including the trailing integrity field.
std::string checkpoint_to_string(const Checkpoint& cp);

/// Parses and validates. Throws VersionMismatch for a foreign format_version
/// and CorruptCheckpoint for anything that fails parsing, the checksum, or
/// the internal consistency checks.
Checkpoint checkpoint_from_string(const std::string& text);

/// Writes through a temporary file and a rename, so an interrupted save
/// leaves the previous checkpoint intact.
void save_checkpoint(const Checkpoint& cp, const std::filesystem::path& path);

/// Throws std::runtime_error when the file cannot be read.
Checkpoint load_checkpoint(const std::filesystem::path& path);

}  // namespace extremal
