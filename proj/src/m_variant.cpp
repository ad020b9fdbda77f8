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

#include "extremal/m_variant.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "extremal/errors.hpp"

namespace extremal {

namespace {

// Unreduced slope numerator and denominator; the denominator is positive.
std::pair<Int256, Int256> raw_slope(const MPoint& a, const MPoint& b) {
  const Int256 num = Int256(b.p) * a.pi - Int256(a.p) * b.pi;
  const Int256 den = Int256(a.pi) * b.pi * (Int256(b.p) - a.p);
  return {num, den};
}

}  // namespace

Fraction m_slope(const MPoint& a, const MPoint& b) {
  auto [num, den] = raw_slope(a, b);
  const Int256 g = boost::multiprecision::gcd(num < 0 ? Int256(-num) : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return {num, den};
}

std::strong_ordering m_slope_compare(const MPoint& a, const MPoint& b, const MPoint& c) {
  if (!(a.p < b.p && b.p < c.p)) {
    throw std::invalid_argument("m_slope_compare requires a.p < b.p < c.p");
  }
  const auto [n1, d1] = raw_slope(a, b);
  const auto [n2, d2] = raw_slope(b, c);
  const Int256 lhs = n1 * d2;
  const Int256 rhs = n2 * d1;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

void m_push_point(MHullState& state, const MPoint& q) {
  auto& st = state.stack;
  if (!st.empty() && q.p <= st.back().point.p) {
    throw std::invalid_argument("m_push_point: out-of-order point " + std::to_string(q.p));
  }
  std::vector<std::uint64_t> ties;
  while (st.size() >= 2) {
    const auto ord = m_slope_compare(st[st.size() - 2].point, st.back().point, q);
    if (ord == std::strong_ordering::greater) break;
    if (st.size() - 1 < state.confirmed_prefix_len) {
      throw std::logic_error("m_push_point would pop confirmed vertex " +
                             std::to_string(st.back().point.p));
    }
    if (ord == std::strong_ordering::equal) {
      std::vector<std::uint64_t> merged = st.back().ties;
      merged.push_back(st.back().point.p);
      merged.insert(merged.end(), ties.begin(), ties.end());
      ties = std::move(merged);
    } else {
      ties.clear();
    }
    st.pop_back();
  }
  st.push_back(MVertex{q, VertexStatus::provisional, std::move(ties)});
  state.last_processed = std::max(state.last_processed, q.p);
}

namespace {

using Real = long double;

struct MBound {
  Real min_t;
  Real (*value)(Real);
  Real (*slope)(Real);
};

Real log_value(Real t) { return std::log(t); }
Real log_slope(Real t) { return 1 / t; }
Real dusart_value(Real t) {
  const Real y = std::log(t);
  return y * y / (y + 1);
}
Real dusart_slope(Real t) {
  const Real y = std::log(t);
  return (1 - 1 / ((y + 1) * (y + 1))) / t;
}

constexpr MBound kBounds[] = {{17, log_value, log_slope}, {599, dusart_value, dusart_slope}};

bool m_certifies(const MBound& b, const MPoint& u, Real slope, Real x) {
  if (!(slope > 0) || x < b.min_t) return false;
  const Real mu = static_cast<Real>(u.p) / static_cast<Real>(u.pi);
  auto gap = [&](Real t) { return b.value(t) - (mu + slope * (t - static_cast<Real>(u.p))); };
  auto gap_slope = [&](Real t) { return b.slope(t) - slope; };
  Real upper = gap(x);
  Real peak = x;
  if (gap_slope(x) > 0) {
    Real lo = x;
    Real hi = 2 * x;
    while (gap_slope(hi) > 0) {
      lo = hi;
      hi *= 2;
      if (hi > 1e60L) return false;
    }
    for (int it = 0; it < 200 && hi - lo > 1e-15L * lo; ++it) {
      const Real mid = lo + (hi - lo) / 2;
      (gap_slope(mid) > 0 ? lo : hi) = mid;
    }
    peak = lo;
    upper = gap(lo) + gap_slope(lo) * (hi - lo);
  }
  return upper < -1e-12L * (std::fabs(b.value(peak)) + 1);
}

}  // namespace

std::size_t m_try_confirm(MHullState& state) {
  auto& st = state.stack;
  std::size_t fresh = 0;
  while (state.confirmed_prefix_len < st.size()) {
    const std::size_t i = state.confirmed_prefix_len;
    bool ok = i == 0;  // leftmost point
    if (!ok) {
      const Real slope = m_slope(st[i - 1].point, st[i].point).to_long_double();
      const Real x = static_cast<Real>(state.last_processed);
      for (const auto& b : kBounds) ok = ok || m_certifies(b, st[i - 1].point, slope, x);
    }
    if (!ok) break;
    st[i].status = VertexStatus::confirmed;
    ++state.confirmed_prefix_len;
    ++fresh;
  }
  return fresh;
}

std::vector<MRecord> compute_m_extremal(std::uint64_t limit, const SieveConfig& cfg) {
  if (limit > kMaxMLimit) throw RangeError("mvariant supports limits up to 10^9");
  if (limit < 2) throw std::invalid_argument("mvariant requires limit >= 2");
  MHullState state;
  SieveConfig c = cfg;
  c.limit = limit;
  c.start = 2;
  c.start_pi = 0;
  stream_primes(
      c, [&](const PrimePoint& pt) { m_push_point(state, MPoint{pt.p, pt.pi}); },
      [&](std::uint64_t x, std::uint64_t) {
        state.last_processed = std::max(state.last_processed, x);
        m_try_confirm(state);
      });
  state.last_processed = std::max(state.last_processed, limit);
  m_try_confirm(state);

  std::vector<MRecord> out;
  const auto& st = state.stack;
  for (std::size_t i = 0; i < st.size(); ++i) {
    MRecord r;
    r.k = i + 1;
    r.m = st[i].point.p;
    r.pi = st[i].point.pi;
    r.status = st[i].status;
    r.ties = st[i].ties;
    if (i + 1 < st.size()) {
      r.delta = m_slope(st[i].point, st[i + 1].point);
      r.lens_len = st[i + 1].point.p - st[i].point.p;
      r.ratio_next = static_cast<double>(st[i + 1].point.p) / static_cast<double>(st[i].point.p);
    }
    out.push_back(std::move(r));
  }
  return out;
}

SequenceComparison compare_sequences(std::span<const ExtremalRecord> e_records,
                                     std::span<const MRecord> m_records) {
  SequenceComparison cmp;
  if (e_records.empty() || m_records.empty()) return cmp;
  cmp.window = std::min(e_records.size(), m_records.size());

  std::vector<std::uint64_t> es;
  std::vector<std::uint64_t> ms;
  for (std::size_t i = 0; i < cmp.window; ++i) {
    es.push_back(e_records[i].e);
    ms.push_back(m_records[i].m);
    if (!cmp.first_divergence && e_records[i].e != m_records[i].m) cmp.first_divergence = i + 1;
  }
  std::set_intersection(es.begin(), es.end(), ms.begin(), ms.end(), std::back_inserter(cmp.common));
  cmp.overlap_fraction = static_cast<double>(cmp.common.size()) / static_cast<double>(cmp.window);

  double se = 0.0;
  double sm = 0.0;
  std::size_t n = 0;
  for (std::size_t i = 0; i + 1 < cmp.window; ++i) {
    if (!e_records[i].ratio_next || !m_records[i].ratio_next) continue;
    se += *e_records[i].ratio_next;
    sm += *m_records[i].ratio_next;
    ++n;
  }
  if (n > 0) {
    cmp.mean_ratio_e = se / static_cast<double>(n);
    cmp.mean_ratio_m = sm / static_cast<double>(n);
  }
  return cmp;
}

}  // namespace extremal
