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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "extremal/hull_engine.hpp"
#include "extremal/records.hpp"

namespace extremal {

using Int256 = boost::multiprecision::checked_int256_t;

/// Largest limit for the M(x) = x / pi(x) hull. At p <= 10^9 the unreduced
/// slope cross products stay below 2^140, inside the checked 256-bit range.
inline constexpr std::uint64_t kMaxMLimit = 1'000'000'000ULL;

/// (p, M(p)) with M(p) = p / pi(p) held as the integer pair.
struct MPoint {
  std::uint64_t p = 0;
  std::uint64_t pi = 0;

  std::string value_string() const { return std::to_string(p) + "/" + std::to_string(pi); }
  friend bool operator==(const MPoint&, const MPoint&) = default;
};

/// Reduced rational num / den with den > 0.
struct Fraction {
  Int256 num = 0;
  Int256 den = 1;

  std::string to_string() const { return num.str() + "/" + den.str(); }
  long double to_long_double() const {
    return num.convert_to<long double>() / den.convert_to<long double>();
  }
  friend bool operator==(const Fraction&, const Fraction&) = default;
};

/// Exact slope (M(b) - M(a)) / (b.p - a.p).
Fraction m_slope(const MPoint& a, const MPoint& b);

/// Orders slope(a, b) against slope(b, c) exactly. Requires a.p < b.p < c.p.
std::strong_ordering m_slope_compare(const MPoint& a, const MPoint& b, const MPoint& c);

struct MVertex {
  MPoint point;
  VertexStatus status = VertexStatus::provisional;
  std::vector<std::uint64_t> ties;

  friend bool operator==(const MVertex&, const MVertex&) = default;
};

struct MHullState {
  std::vector<MVertex> stack;
  std::size_t confirmed_prefix_len = 0;
  std::uint64_t last_processed = 0;
};

void m_push_point(MHullState& state, const MPoint& q);

/// Confirms vertices that no prime beyond state.last_processed can pop, using
/// M(t) < ln t (t >= 17) and M(t) <= ln^2 t / (ln t + 1) (t >= 599), the
/// reciprocal forms of pi(t) > t / ln t and pi(t) >= t / ln t (1 + 1 / ln t).
std::size_t m_try_confirm(MHullState& state);

struct MRecord {
  std::size_t k = 0;
  std::uint64_t m = 0;
  std::uint64_t pi = 0;
  VertexStatus status = VertexStatus::provisional;
  std::optional<Fraction> delta;
  std::optional<std::uint64_t> lens_len;
  std::optional<double> ratio_next;
  std::vector<std::uint64_t> ties;

  std::string value_string() const { return std::to_string(m) + "/" + std::to_string(pi); }
};

/// Upper-hull vertices of {(p, p / pi(p))} for primes p <= limit, confirmed
/// prefix first, then the provisional tail. Throws RangeError above 10^9.
std::vector<MRecord> compute_m_extremal(std::uint64_t limit, const SieveConfig& cfg = {});

struct SequenceComparison {
  std::vector<std::uint64_t> common;
  /// Compared prefix length: min(|E|, |M|).
  std::size_t window = 0;
  double overlap_fraction = 0.0;
  std::optional<std::size_t> first_divergence;  // 1-based k with e_k != m_k
  std::optional<double> mean_ratio_e;
  std::optional<double> mean_ratio_m;
};

SequenceComparison compare_sequences(std::span<const ExtremalRecord> e_records,
                                     std::span<const MRecord> m_records);

}  // namespace extremal
