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
#include <span>
#include <string>
#include <vector>

#include "extremal/compensated_sum.hpp"
#include "extremal/records.hpp"

namespace extremal {

struct LensRow {
  std::size_t k;
  std::uint64_t e;
  std::uint64_t pi_e;
  ExactSlope delta;
  ExactSlope alpha;  // dp / dpi
  double alpha_value;
  std::uint64_t lens_len;
  double ratio_next;
  /// |S_k| / (sqrt(e_k) ln^2 e_k).
  double normalized_len;
};

/// One row per record that has a successor. Throws std::invalid_argument
/// for fewer than two records.
std::vector<LensRow> lens_table(std::span<const ExtremalRecord> records);

/// Partial sums of 1/e_k and 1/ln e_k.
struct ConjectureSums {
  CompensatedSum sum_inv;
  CompensatedSum sum_invlog;
  std::size_t count = 0;

  void add(std::uint64_t e);

  friend bool operator==(const ConjectureSums&, const ConjectureSums&) = default;
};

/// Sums over the confirmed records, in order.
ConjectureSums conjecture_sums(std::span<const ExtremalRecord> records);

/// Number of confirmed extremal primes <= x. Throws std::out_of_range when x
/// lies beyond the last confirmed record, where the count is not yet known.
std::size_t pi_epsilon(std::uint64_t x, std::span<const ExtremalRecord> records);

struct ExponentPoint {
  std::size_t k;
  double ratio;  // ln k / ln e_k
};

std::vector<ExponentPoint> exponent_estimate(std::span<const ExtremalRecord> records);

struct TwinPair {
  std::size_t k;
  std::uint64_t e;
  std::uint64_t e_next;
  std::uint64_t pi_e;
};

/// Consecutive confirmed extremal primes with pi(e_{k+1}) - pi(e_k) = 1.
std::vector<TwinPair> find_twins(std::span<const ExtremalRecord> records);

struct TieEntry {
  std::size_t k;
  std::uint64_t e;
  std::vector<std::uint64_t> ties;
};

std::vector<TieEntry> tie_report(std::span<const ExtremalRecord> records);

/// Mean of e_{k+1}/e_k over records with k in [k_lo, k_hi] that have a successor.
std::optional<double> mean_ratio(std::span<const ExtremalRecord> records, std::size_t k_lo,
                                 std::size_t k_hi);

struct ConcavityCheck {
  bool concave = true;
  /// Index i of the first point where slope(i-1, i) <= slope(i, i+1).
  std::optional<std::size_t> violation;
};

/// Strictly decreasing consecutive slopes. Input must start at (2, 1) with
/// strictly increasing primes; otherwise std::invalid_argument.
ConcavityCheck check_concave(std::span<const PrimePoint> points);

struct EnvelopePoint {
  std::uint64_t p;
  double ratio;  // |pi(p) - L(p)| / (sqrt(p) ln p)
};

struct EnvelopeReport {
  std::uint64_t limit = 0;
  std::uint64_t primes_checked = 0;
  double max_ratio = 0.0;
  std::uint64_t argmax = 0;
  /// Primes >= the reporting floor with ratio >= 1.
  std::vector<EnvelopePoint> violations;
  /// Primes below the floor with ratio >= 1; reported, not counted.
  std::vector<EnvelopePoint> boundary;
};

/// Scans every prime p <= limit (<= 10^9) against |pi(p) - L(p)| < sqrt(p) ln p.
/// max_ratio and violations consider p >= floor only.
EnvelopeReport verify_envelope(std::uint64_t limit, std::uint64_t floor = 11);

}  // namespace extremal
