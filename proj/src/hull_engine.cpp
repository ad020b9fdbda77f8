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

#include "extremal/hull_engine.hpp"

#include <cmath>
#include <stdexcept>

#include "extremal/errors.hpp"
#include "extremal/records.hpp"

namespace extremal {

ExactSlope ExactSlope::between(const PrimePoint& a, const PrimePoint& b) {
  return ExactSlope{static_cast<std::int64_t>(b.pi) - static_cast<std::int64_t>(a.pi),
                    static_cast<std::int64_t>(b.p) - static_cast<std::int64_t>(a.p)};
}

std::string ExactSlope::to_string() const {
  return std::to_string(dpi) + "/" + std::to_string(dp);
}

std::strong_ordering slope_compare(const PrimePoint& a, const PrimePoint& b,
                                   const PrimePoint& c) {
  if (!(a.p < b.p && b.p < c.p)) {
    throw std::invalid_argument("slope_compare requires a.p < b.p < c.p");
  }
  return ExactSlope::between(a, b) <=> ExactSlope::between(b, c);
}

void push_point(HullState& state, const PrimePoint& q) {
  auto& st = state.stack;
  if (!st.empty() && q.p <= st.back().point.p) {
    throw std::invalid_argument("push_point: point " + std::to_string(q.p) +
                                " is not right of the hull top " +
                                std::to_string(st.back().point.p));
  }
  std::vector<PrimePoint> ties;
  while (st.size() >= 2) {
    const auto& u = st[st.size() - 2].point;
    const auto& v = st.back();
    const auto ord = ExactSlope::between(u, v.point) <=> ExactSlope::between(v.point, q);
    if (ord == std::strong_ordering::greater) break;
    if (st.size() - 1 < state.confirmed_prefix_len) {
      throw std::logic_error("push_point would pop confirmed vertex " +
                             std::to_string(v.point.p));
    }
    if (ord == std::strong_ordering::equal) {
      // v and its own ties lie on the segment from u to q.
      std::vector<PrimePoint> merged = v.collinear_predecessors;
      merged.push_back(v.point);
      merged.insert(merged.end(), ties.begin(), ties.end());
      ties = std::move(merged);
    } else {
      ties.clear();
    }
    st.pop_back();
  }
  st.push_back(HullVertex{q, VertexStatus::provisional, std::move(ties)});
  state.last_processed = q.p;
  state.pi_at_last = q.pi;
}

void advance(HullState& state, std::uint64_t x, std::uint64_t pi_x) {
  if (x < state.last_processed || pi_x < state.pi_at_last) {
    throw std::invalid_argument("advance: position moved backwards");
  }
  state.last_processed = x;
  state.pi_at_last = pi_x;
}

namespace {

using Real = long double;

struct BoundShape {
  Real min_log;  // concave and valid for ln t >= min_log
  Real (*value)(Real t);
  Real (*slope)(Real t);
};

constexpr Real kRS = 1.25506L;
constexpr Real kDusart = 2.53816L;

Real rs_value(Real t) { return kRS * t / std::log(t); }
Real rs_slope(Real t) {
  const Real y = std::log(t);
  return kRS * (y - 1) / (y * y);
}
Real dusart_value(Real t) {
  const Real y = std::log(t);
  return t / y * (1 + 1 / y + kDusart / (y * y));
}
Real dusart_slope(Real t) {
  const Real y = std::log(t);
  const Real y3 = y * y * y;
  return 1 / y + (kDusart - 2) / y3 - 3 * kDusart / (y3 * y);
}

BoundShape shape(PiBound b) {
  switch (b) {
    case PiBound::rosser_schoenfeld:
      return {2.0L, rs_value, rs_slope};
    case PiBound::dusart:
      // Second derivative changes sign near ln t = 2.96.
      return {3.5L, dusart_value, dusart_slope};
  }
  throw std::invalid_argument("unknown bound");
}

constexpr Real kRelMargin = 1e-12L;

}  // namespace

bool certifies(PiBound bound, const PrimePoint& u, const ExactSlope& s, std::uint64_t x) {
  if (s.dpi <= 0 || s.dp <= 0) return false;
  const BoundShape b = shape(bound);
  const Real t0 = static_cast<Real>(x);
  if (!(t0 > u.p) || std::log(t0) < b.min_log) return false;

  const Real slope = static_cast<Real>(s.dpi) / static_cast<Real>(s.dp);
  auto gap = [&](Real t) {
    return b.value(t) - (static_cast<Real>(u.pi) + slope * (t - static_cast<Real>(u.p)));
  };
  auto gap_slope = [&](Real t) { return b.slope(t) - slope; };

  // g = bound - line is concave, so its supremum on [t0, inf) sits at t0 or
  // at the zero of g'. Bracket that zero and bound g from above by the
  // tangent at the left end of the bracket.
  Real t_peak = t0;
  Real upper = gap(t0);
  if (gap_slope(t0) > 0) {
    Real lo = t0;
    Real hi = 2 * t0;
    while (gap_slope(hi) > 0) {
      lo = hi;
      hi *= 2;
      if (hi > 1e60L) return false;
    }
    for (int it = 0; it < 200 && hi - lo > 1e-15L * lo; ++it) {
      const Real mid = lo + (hi - lo) / 2;
      (gap_slope(mid) > 0 ? lo : hi) = mid;
    }
    t_peak = lo;
    upper = gap(lo) + gap_slope(lo) * (hi - lo);
  }
  return upper < -kRelMargin * (std::fabs(b.value(t_peak)) + 1);
}

bool rosser_schoenfeld_condition(const PrimePoint& u, const ExactSlope& s, std::uint64_t x) {
  const double xd = static_cast<double>(x);
  if (!(xd > std::exp(2.0)) || s.dpi <= 0) return false;
  const Real slope = static_cast<Real>(s.dpi) / static_cast<Real>(s.dp);
  const Real line =
      static_cast<Real>(u.pi) + slope * (static_cast<Real>(x) - static_cast<Real>(u.p));
  const Real bound = pi_upper_bound(xd);
  return bound_slope(xd) < slope && bound * (1 + kRelMargin) < line;
}

std::size_t try_confirm(HullState& state) {
  auto& st = state.stack;
  std::size_t fresh = 0;
  while (state.confirmed_prefix_len < st.size()) {
    const std::size_t i = state.confirmed_prefix_len;
    auto& v = st[i];
    bool ok = v.point.p <= 3;  // 2 is the left end; slope 1 to 3 is the global maximum
    if (!ok) {
      const PrimePoint& u = st[i - 1].point;
      const ExactSlope s = ExactSlope::between(u, v.point);
      ok = certifies(PiBound::dusart, u, s, state.last_processed) ||
           certifies(PiBound::rosser_schoenfeld, u, s, state.last_processed);
    }
    if (!ok) break;
    v.status = VertexStatus::confirmed;
    ++state.confirmed_prefix_len;
    ++fresh;
  }
  return fresh;
}

void extend_hull(HullState& state, std::uint64_t limit, const SieveConfig& cfg,
                 const std::function<void(const HullState&)>& on_segment) {
  if (limit < 2 || limit <= state.last_processed) {
    if (limit > kMaxLimit) throw RangeError("limit exceeds 10^12");
    try_confirm(state);
    return;
  }
  SieveConfig c = cfg;
  c.limit = limit;
  c.start = state.last_processed + 1;
  c.start_pi = state.pi_at_last;
  stream_primes(
      c, [&](const PrimePoint& q) { push_point(state, q); },
      [&](std::uint64_t x, std::uint64_t pi_x) {
        advance(state, x, pi_x);
        try_confirm(state);
        if (on_segment) on_segment(state);
      });
  advance(state, limit, state.pi_at_last);
  try_confirm(state);
}

std::vector<ExtremalRecord> records_from_state(const HullState& state,
                                               bool include_provisional) {
  const auto& st = state.stack;
  const std::size_t n = include_provisional ? st.size() : state.confirmed_prefix_len;
  std::vector<ExtremalRecord> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    ExtremalRecord r;
    r.k = i + 1;
    r.e = st[i].point.p;
    r.pi_e = st[i].point.pi;
    r.status = st[i].status;
    for (const auto& t : st[i].collinear_predecessors) r.ties.push_back(t.p);
    if (i + 1 < st.size()) {
      const auto& next = st[i + 1];
      r.delta = ExactSlope::between(st[i].point, next.point);
      r.lens_len = next.point.p - st[i].point.p;
      r.ratio_next = static_cast<double>(next.point.p) / static_cast<double>(st[i].point.p);
      r.successor_confirmed = next.status == VertexStatus::confirmed;
    }
    out.push_back(std::move(r));
  }
  return out;
}

ExtremalRun compute_extremal(std::uint64_t limit, const SieveConfig& cfg) {
  if (limit < 2) throw std::invalid_argument("compute_extremal requires limit >= 2");
  if (limit > kMaxLimit) throw RangeError("limit exceeds 10^12");
  ExtremalRun run;
  extend_hull(run.state, limit, cfg);
  run.confirmed = records_from_state(run.state, false);
  run.provisional_tail.assign(run.state.stack.begin() + static_cast<std::ptrdiff_t>(run.state.confirmed_prefix_len),
                              run.state.stack.end());
  return run;
}

}  // namespace extremal
