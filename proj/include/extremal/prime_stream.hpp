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
#include <functional>
#include <optional>

namespace extremal {

/// A prime together with its exact rank pi(p).
struct PrimePoint {
  std::uint64_t p = 0;
  std::uint64_t pi = 0;

  friend constexpr bool operator==(const PrimePoint&, const PrimePoint&) = default;
};

/// Largest limit accepted by the sieve. Keeps every cross product taken by
/// the hull predicates below 4e22, far inside signed 128-bit range.
inline constexpr std::uint64_t kMaxLimit = 1'000'000'000'000ULL;

/// Smallest accepted segment width, in odd integers.
inline constexpr std::uint64_t kMinSegmentSize = 1024;

struct SieveConfig {
  std::uint64_t limit = 0;
  /// Odd integers per segment.
  std::uint64_t segment_size = 1u << 18;
  /// First integer considered. Values below 2 are treated as 2.
  std::uint64_t start = 2;
  /// Number of primes strictly below `start`.
  std::uint64_t start_pi = 0;
  /// Segments sieved concurrently; delivery stays in order.
  unsigned workers = 1;
};

struct StreamSummary {
  std::uint64_t count = 0;
  std::optional<PrimePoint> last;
};

using PrimeConsumer = std::function<void(const PrimePoint&)>;

/// Invoked after each segment with (largest integer fully sieved, pi of it).
using SegmentObserver = std::function<void(std::uint64_t, std::uint64_t)>;

/// Emits every prime in [cfg.start, cfg.limit] in increasing order with its
/// exact pi value. Output does not depend on segment_size or workers.
///
/// Throws RangeError for limits above kMaxLimit and std::invalid_argument
/// for malformed configurations.
StreamSummary stream_primes(const SieveConfig& cfg, const PrimeConsumer& consumer,
                            const SegmentObserver& on_segment = {});

/// Rosser-Schoenfeld upper bound 1.25506 x / ln x, valid for every x > 1.
double pi_upper_bound(double x);

/// Derivative of pi_upper_bound; strictly decreasing for x > e^2.
double bound_slope(double x);

/// Floor of the square root, exact for all 64-bit inputs.
std::uint64_t isqrt(std::uint64_t n);

}  // namespace extremal
