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

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "extremal/prime_stream.hpp"

namespace extremal {

/// The rational dpi / dp, kept unreduced. Ordering is by 128-bit
/// cross-multiplication; no floating point is involved.
struct ExactSlope {
  std::int64_t dpi = 0;
  std::int64_t dp = 1;

  static ExactSlope between(const PrimePoint& a, const PrimePoint& b);

  double to_double() const { return static_cast<double>(dpi) / static_cast<double>(dp); }
  std::string to_string() const;

  friend std::strong_ordering operator<=>(const ExactSlope& a, const ExactSlope& b) {
    const __int128 lhs = static_cast<__int128>(a.dpi) * b.dp;
    const __int128 rhs = static_cast<__int128>(b.dpi) * a.dp;
    return lhs <=> rhs;
  }
  /// Rational equality (1/2 == 2/4).
  friend bool operator==(const ExactSlope& a, const ExactSlope& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }
  /// Same unreduced representation.
  bool identical(const ExactSlope& o) const { return dpi == o.dpi && dp == o.dp; }
};

/// Orders slope(a, b) against slope(b, c). Requires a.p < b.p < c.p.
std::strong_ordering slope_compare(const PrimePoint& a, const PrimePoint& b,
                                   const PrimePoint& c);

enum class VertexStatus { provisional, confirmed };

struct HullVertex {
  PrimePoint point;
  VertexStatus status = VertexStatus::provisional;
  /// Primes popped on an exact slope tie while this vertex advanced. They lie
  /// on the segment from the previous vertex to this one, in increasing order.
  std::vector<PrimePoint> collinear_predecessors;

  friend bool operator==(const HullVertex&, const HullVertex&) = default;
};

struct HullState {
  std::vector<HullVertex> stack;
  std::size_t confirmed_prefix_len = 0;
  std::uint64_t last_processed = 0;
  std::uint64_t pi_at_last = 0;

  friend bool operator==(const HullState&, const HullState&) = default;
};

/// Appends q to the upper hull. Vertices whose slope from their predecessor
/// is <= the slope onward to q are popped; ties are carried into q's
/// collinear_predecessors, so the surviving vertex on a tied slope is the
/// largest prime of the tie set.
///
/// Throws std::invalid_argument when q does not lie right of the stack top,
/// and std::logic_error if a confirmed vertex would be popped.
void push_point(HullState& state, const PrimePoint& q);

/// Records that every integer up to x has been pushed (pi_x = pi(x)).
void advance(HullState& state, std::uint64_t x, std::uint64_t pi_x);

/// Confirms hull vertices, in order from the confirmed prefix, that no
/// prime beyond state.last_processed can ever pop. Returns the number of
/// newly confirmed vertices. e_1 = 2 and e_2 = 3 are confirmed as soon as
/// they are on the stack.
std::size_t try_confirm(HullState& state);

// Confirmation certificates -------------------------------------------------
//
// A vertex v with predecessor u and slope s = slope(u, v) is final once an
// upper bound B >= pi, concave on [x, inf), satisfies B(t) < u.pi + s (t - u.p)
// for every t >= x: any later prime q then lies strictly below the line
// through u and v, so slope(v, q) < s and q cannot pop v.

enum class PiBound {
  /// 1.25506 x / ln x for x > 1 (Rosser and Schoenfeld, 1962).
  rosser_schoenfeld,
  /// x / ln x (1 + 1 / ln x + 2.53816 / ln^2 x) for x > 1 (Dusart, 2018).
  dusart,
};

/// True when `bound` certifies the line through u with slope s beyond x.
/// All evaluation errors are pushed in the conservative direction.
bool certifies(PiBound bound, const PrimePoint& u, const ExactSlope& s, std::uint64_t x);

/// The two-point test using only the value and slope of pi_upper_bound at x:
/// x > e^2, bound_slope(x) < s and pi_upper_bound(x) < u.pi + s (x - u.p).
bool rosser_schoenfeld_condition(const PrimePoint& u, const ExactSlope& s, std::uint64_t x);

// Streaming driver ------------------------------------------------------------

/// Sieves from just past state.last_processed up to `limit`, pushing every
/// prime and running try_confirm after each segment. `cfg.limit`, `start`
/// and `start_pi` are overridden from the state. `on_segment` runs after
/// each confirmation pass and may snapshot the state.
void extend_hull(HullState& state, std::uint64_t limit, const SieveConfig& cfg,
                 const std::function<void(const HullState&)>& on_segment = {});

}  // namespace extremal
