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

#include "extremal/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "extremal/errors.hpp"
#include "extremal/lens_bounds.hpp"

namespace extremal {

std::vector<LensRow> lens_table(std::span<const ExtremalRecord> records) {
  if (records.size() < 2) throw std::invalid_argument("lens_table needs at least two records");
  std::vector<LensRow> rows;
  for (const auto& r : records) {
    if (!r.delta) continue;
    const double e = static_cast<double>(r.e);
    const double ln_e = std::log(e);
    const ExactSlope alpha = *r.alpha();
    rows.push_back(LensRow{r.k, r.e, r.pi_e, *r.delta, alpha, alpha.to_double(), *r.lens_len,
                           *r.ratio_next,
                           static_cast<double>(*r.lens_len) / (std::sqrt(e) * ln_e * ln_e)});
  }
  return rows;
}

void ConjectureSums::add(std::uint64_t e) {
  const double v = static_cast<double>(e);
  sum_inv.add(1.0 / v);
  sum_invlog.add(1.0 / std::log(v));
  ++count;
}

ConjectureSums conjecture_sums(std::span<const ExtremalRecord> records) {
  ConjectureSums sums;
  for (const auto& r : records) {
    if (r.status == VertexStatus::confirmed) sums.add(r.e);
  }
  return sums;
}

std::size_t pi_epsilon(std::uint64_t x, std::span<const ExtremalRecord> records) {
  std::optional<std::uint64_t> last;
  std::size_t count = 0;
  for (const auto& r : records) {
    if (r.status != VertexStatus::confirmed) break;
    last = r.e;
    if (r.e <= x) ++count;
  }
  if (!last || x > *last) {
    throw std::out_of_range("pi_epsilon: x lies beyond the last confirmed extremal prime");
  }
  return count;
}

std::vector<ExponentPoint> exponent_estimate(std::span<const ExtremalRecord> records) {
  std::vector<ExponentPoint> out;
  for (const auto& r : records) {
    if (r.k < 2) continue;
    out.push_back({r.k, std::log(static_cast<double>(r.k)) / std::log(static_cast<double>(r.e))});
  }
  return out;
}

std::vector<TwinPair> find_twins(std::span<const ExtremalRecord> records) {
  std::vector<TwinPair> out;
  for (const auto& r : records) {
    if (r.status != VertexStatus::confirmed || !r.successor_confirmed || !r.delta) continue;
    if (r.delta->dpi == 1) out.push_back({r.k, r.e, r.e + *r.lens_len, r.pi_e});
  }
  return out;
}

std::vector<TieEntry> tie_report(std::span<const ExtremalRecord> records) {
  std::vector<TieEntry> out;
  for (const auto& r : records) {
    if (!r.ties.empty()) out.push_back({r.k, r.e, r.ties});
  }
  return out;
}

std::optional<double> mean_ratio(std::span<const ExtremalRecord> records, std::size_t k_lo,
                                 std::size_t k_hi) {
  double sum = 0.0;
  std::size_t n = 0;
  for (const auto& r : records) {
    if (r.k < k_lo || r.k > k_hi || !r.ratio_next) continue;
    sum += *r.ratio_next;
    ++n;
  }
  if (n == 0) return std::nullopt;
  return sum / static_cast<double>(n);
}

ConcavityCheck check_concave(std::span<const PrimePoint> points) {
  if (points.empty() || points.front().p != 2 || points.front().pi != 1) {
    throw std::invalid_argument("check_concave: sequence must start at (2, 1)");
  }
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (points[i].p <= points[i - 1].p || points[i].pi <= points[i - 1].pi) {
      throw std::invalid_argument("check_concave: points must be strictly increasing");
    }
  }
  ConcavityCheck out;
  for (std::size_t i = 1; i + 1 < points.size(); ++i) {
    if (slope_compare(points[i - 1], points[i], points[i + 1]) != std::strong_ordering::greater) {
      out.concave = false;
      out.violation = i;
      break;
    }
  }
  return out;
}

EnvelopeReport verify_envelope(std::uint64_t limit, std::uint64_t floor) {
  if (limit > 1'000'000'000ULL) throw RangeError("verify_envelope supports limits up to 10^9");
  EnvelopeReport report;
  report.limit = limit;
  if (limit < 2) return report;
  lens::LiAccumulator L;
  SieveConfig cfg;
  cfg.limit = limit;
  stream_primes(cfg, [&](const PrimePoint& pt) {
    const long double x = static_cast<long double>(pt.p);
    const long double dev = std::fabs(static_cast<long double>(pt.pi) - L.advance_to(x));
    const double ratio = static_cast<double>(dev / (std::sqrt(x) * std::log(x)));
    ++report.primes_checked;
    if (pt.p < floor) {
      if (ratio >= 1.0) report.boundary.push_back({pt.p, ratio});
      return;
    }
    if (ratio > report.max_ratio) {
      report.max_ratio = ratio;
      report.argmax = pt.p;
    }
    if (ratio >= 1.0) report.violations.push_back({pt.p, ratio});
  });
  return report;
}

}  // namespace extremal
