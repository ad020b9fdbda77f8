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
#include <optional>
#include <vector>

#include "extremal/hull_engine.hpp"

namespace extremal {

/// One hull vertex e_k together with the segment that leaves it.
struct ExtremalRecord {
  std::size_t k = 0;  // 1-based
  std::uint64_t e = 0;
  std::uint64_t pi_e = 0;
  VertexStatus status = VertexStatus::confirmed;
  /// Slope to the next hull vertex; absent for the last vertex.
  std::optional<ExactSlope> delta;
  std::optional<std::uint64_t> lens_len;
  std::optional<double> ratio_next;
  /// Whether the vertex that delta/lens_len/ratio_next refer to is confirmed.
  bool successor_confirmed = false;
  /// Primes on the incoming segment with exactly the same slope.
  std::vector<std::uint64_t> ties;

  /// Average gap 1/delta as the unreduced fraction dp / dpi.
  std::optional<ExactSlope> alpha() const {
    if (!delta) return std::nullopt;
    return ExactSlope{delta->dp, delta->dpi};
  }

  friend bool operator==(const ExtremalRecord& a, const ExtremalRecord& b) {
    auto same_delta = [](const std::optional<ExactSlope>& x, const std::optional<ExactSlope>& y) {
      return x.has_value() == y.has_value() && (!x || x->identical(*y));
    };
    return a.k == b.k && a.e == b.e && a.pi_e == b.pi_e && a.status == b.status &&
           same_delta(a.delta, b.delta) && a.lens_len == b.lens_len &&
           a.ratio_next == b.ratio_next && a.successor_confirmed == b.successor_confirmed &&
           a.ties == b.ties;
  }
};

/// Records for the confirmed prefix of the hull, followed by the provisional
/// tail when `include_provisional` is set. Successor fields use the next
/// vertex on the current hull whether or not it is confirmed.
std::vector<ExtremalRecord> records_from_state(const HullState& state,
                                               bool include_provisional);

struct ExtremalRun {
  std::vector<ExtremalRecord> confirmed;
  std::vector<HullVertex> provisional_tail;
  HullState state;
};

/// Runs the hull from scratch to `limit` (>= 2).
ExtremalRun compute_extremal(std::uint64_t limit, const SieveConfig& cfg = {});

}  // namespace extremal
