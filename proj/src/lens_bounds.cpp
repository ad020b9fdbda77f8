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

#include "extremal/lens_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "extremal/errors.hpp"

namespace extremal::lens {

namespace {

struct GaussRule {
  std::vector<Real> nodes;
  std::vector<Real> weights;
};

// Gauss-Legendre nodes on [-1, 1] by Newton iteration on P_n.
GaussRule make_rule(int n) {
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    Real z = std::cos(std::numbers::pi_v<Real> * (i + 0.75L) / (n + 0.5L));
    Real dp = 0;
    for (int it = 0; it < 100; ++it) {
      Real p0 = 1;
      Real p1 = z;
      for (int k = 2; k <= n; ++k) {
        const Real p2 = ((2 * k - 1) * z * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (z * p1 - p0) / (z * z - 1);
      const Real step = p1 / dp;
      z -= step;
      if (std::fabs(step) < 1e-21L) break;
    }
    rule.nodes[i] = z;
    rule.weights[i] = 2 / ((1 - z * z) * dp * dp);
  }
  return rule;
}

const GaussRule& rule20() {
  static const GaussRule r = make_rule(20);
  return r;
}
const GaussRule& rule10() {
  static const GaussRule r = make_rule(10);
  return r;
}

Real apply(const GaussRule& rule, Real a, Real b) {
  const Real mid = (a + b) / 2;
  const Real half = (b - a) / 2;
  Real s = 0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    s += rule.weights[i] / std::log(mid + half * rule.nodes[i]);
  }
  return s * half;
}

Real adaptive(Real a, Real b, int depth) {
  const Real fine = apply(rule20(), a, b);
  const Real coarse = apply(rule10(), a, b);
  if (depth >= 40 || std::fabs(fine - coarse) <= 1e-17L * std::fabs(fine)) return fine;
  const Real mid = (a + b) / 2;
  return adaptive(a, mid, depth + 1) + adaptive(mid, b, depth + 1);
}

void kahan_add(Real& sum, Real& comp, Real value) {
  const Real t = sum + value;
  if (std::fabs(sum) >= std::fabs(value)) {
    comp += (sum - t) + value;
  } else {
    comp += (value - t) + sum;
  }
  sum = t;
}

Real sqr(Real v) { return v * v; }

}  // namespace

AnalyticPoint::AnalyticPoint(Real x_value) : x(x_value), y(0) {
  if (!(x_value > 2)) throw std::domain_error("analytic point requires x > 2");
  y = std::log(x_value);
}

Real li_between(Real a, Real b) {
  if (b < a) return -li_between(b, a);
  if (!(a >= 2)) throw std::domain_error("li requires arguments >= 2");
  Real sum = 0;
  Real comp = 0;
  Real lo = a;
  // Geometric panels [t, 2t] keep the singularity at t = 1 well outside each
  // panel's Bernstein ellipse.
  while (lo < b) {
    const Real hi = std::min(b, 2 * lo);
    kahan_add(sum, comp, adaptive(lo, hi, 0));
    lo = hi;
  }
  return sum + comp;
}

Real li(Real x) {
  if (!(x >= 2)) throw std::domain_error("li requires x >= 2");
  return li_between(2, x);
}

Real LiAccumulator::advance_to(Real x) {
  if (x < position_) throw std::invalid_argument("LiAccumulator moves forward only");
  if (x > position_) {
    kahan_add(sum_, compensation_, li_between(position_, x));
    position_ = x;
  }
  return value();
}

Real error_term(Real x) { return std::sqrt(x) * std::log(x); }

Derivatives derivatives(const AnalyticPoint& pt) {
  const Real x = pt.x;
  const Real y = pt.y;
  const Real s = std::sqrt(x);
  Derivatives d;
  d.li[0] = li(x);
  d.li[1] = 1 / y;
  d.li[2] = -1 / (x * y * y);
  d.li[3] = (y + 2) / (x * x * y * y * y);
  d.li[4] = -(2 * y * y + 6 * y + 6) / (x * x * x * sqr(sqr(y)));
  d.eps[0] = s * y;
  d.eps[1] = (y + 2) / (2 * s);
  d.eps[2] = -y / (4 * x * s);
  d.eps[3] = (3 * y - 2) / (8 * x * x * s);
  d.eps[4] = (16 - 15 * y) / (16 * x * x * x * s);
  return d;
}

namespace {
Real taylor(const std::array<Real, 5>& f, Real h) {
  return f[0] + h * (f[1] + h * (f[2] / 2 + h * f[3] / 6));
}
}  // namespace

Real taylor_li(const AnalyticPoint& pt, Real h) { return taylor(derivatives(pt).li, h); }
Real taylor_eps(const AnalyticPoint& pt, Real h) { return taylor(derivatives(pt).eps, h); }

PhiTangent phi_and_tangent(const AnalyticPoint& pt, Real h) {
  PhiTangent out;
  out.phi = li(pt.x) - error_term(pt.x);
  out.dphi = 1 / pt.y - (pt.y + 2) / (2 * std::sqrt(pt.x));
  out.tangent = out.dphi * h + out.phi;
  return out;
}

Real phi_second(Real x) {
  const Real y = std::log(x);
  const Real s = std::sqrt(x);
  return (y * y * y - 4 * s) / (4 * x * s * y * y);
}

Real concavity_threshold() {
  static const Real threshold = [] {
    auto g = [](Real x) { return std::pow(std::log(x), 3) - 4 * std::sqrt(x); };
    // g > 0 on (~40, x_o) and g < 0 beyond; bisect in log space.
    Real lo = 1e4L;
    Real hi = 1e7L;
    while ((hi - lo) > 1e-13L * lo) {
      const Real mid = std::sqrt(lo * hi);
      (g(mid) > 0 ? lo : hi) = mid;
    }
    for (int i = 1; i <= 10; ++i) {
      const Real probe = hi * std::pow(2.0L, static_cast<Real>(i));
      if (!(phi_second(probe) < 0)) {
        throw NumericError("phi'' not negative above the concavity threshold");
      }
    }
    return hi;
  }();
  return threshold;
}

Real CubicProblem::w(Real h) const { return ((A[0] * h + A[1]) * h + A[2]) * h + A[3]; }

Real CubicProblem::monic(Real h) const { return ((h + B[0]) * h + B[1]) * h + B[2]; }

Real CubicProblem::reduced(Real t) const {
  return ((t + (v[0] - 3)) * t + v[1]) * t + v[2];
}

Real CubicProblem::reduced_slope(Real t) const {
  return (3 * t + 2 * (v[0] - 3)) * t + v[1];
}

Real CubicProblem::coefficient_scale() const {
  return std::max({Real{1}, std::fabs(v[0] - 3), std::fabs(v[1]), std::fabs(v[2])});
}

CubicProblem cubic_coeffs(const AnalyticPoint& pt) {
  const Real x = pt.x;
  const Real y = pt.y;
  const Real s = std::sqrt(x);
  const Real y2 = y * y;
  const Real y3 = y2 * y;
  const Real y4 = y3 * y;

  CubicProblem c;
  c.x = x;
  c.A[0] = (8 * s * (y + 2) + y3 * (3 * y - 2)) / (48 * x * x * s * y3);
  c.A[1] = -(4 * s + y3) / (8 * x * s * y2);
  c.A[2] = (y + 2) / s;
  c.A[3] = 2 * s * y;
  if (!(c.A[0] > 0)) {
    throw NumericError("leading coefficient A3 is not positive at x = " + std::to_string(static_cast<double>(x)));
  }

  // Closed forms of A_i / A3 and their theta-scaled versions share one
  // denominator; nothing here divides two evaluated coefficients.
  const Real den = 8 * s * y + 16 * s + 3 * y4 - 2 * y3;
  c.B[0] = -6 * x * y * (4 * s + y3) / den;
  c.B[1] = 48 * x * x * y3 * (y + 2) / den;
  c.B[2] = 96 * x * x * x * y4 / den;
  c.v[0] = (48 * s + 3 * y4 - 6 * y3) / den;
  c.v[1] = 48 * y3 * (y + 2) / den;
  c.v[2] = 96 * y4 / den;
  return c;
}

namespace {

// Root of f on [lo, hi] where f(lo) and f(hi) have opposite signs.
template <class F>
Real bisect(F&& f, Real lo, Real hi) {
  Real flo = f(lo);
  for (int it = 0; it < 400; ++it) {
    const Real mid = lo + (hi - lo) / 2;
    if (mid <= lo || mid >= hi) break;
    const Real fm = f(mid);
    if (fm == 0) return mid;
    if ((fm > 0) == (flo > 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return lo + (hi - lo) / 2;
}

}  // namespace

ThetaRoots solve_theta(const AnalyticPoint& pt, Real alpha) {
  if (!(alpha > 0 && alpha <= 1)) throw std::invalid_argument("alpha must lie in (0, 1]");
  const CubicProblem c = cubic_coeffs(pt);
  const Real a2 = alpha * alpha;
  const bool upper = c.v[0] * a2 + c.v[1] * alpha + c.v[2] < 2 * a2;
  const bool lower = c.v[0] * a2 - c.v[1] * alpha + c.v[2] < 2 * a2;
  if (!upper || !lower) {
    throw NumericError("root preconditions fail at x = " + std::to_string(static_cast<double>(pt.x)) +
                       " for alpha = " + std::to_string(static_cast<double>(alpha)) +
                       " (v2=" + std::to_string(static_cast<double>(c.v[0])) +
                       ", v1=" + std::to_string(static_cast<double>(c.v[1])) +
                       ", v0=" + std::to_string(static_cast<double>(c.v[2])) + ")");
  }
  auto f = [&](Real t) { return c.reduced(t); };
  ThetaRoots r;
  r.theta_plus = bisect(f, 0, alpha);
  r.theta_minus = bisect(f, -alpha, 0);
  const Real scale = c.coefficient_scale();
  r.residuals = {std::fabs(f(r.theta_minus)) / scale, std::fabs(f(r.theta_plus)) / scale};
  r.h_minus_star = r.theta_minus * pt.x;
  r.h_plus_star = r.theta_plus * pt.x;
  return r;
}

NearestRoots isolate_theta_roots(const CubicProblem& c) {
  const Real bound = 1 + c.coefficient_scale();
  std::vector<Real> cuts{-bound, 0, bound};
  // Critical points of f: 3 t^2 + 2 (v2 - 3) t + v1 = 0.
  const Real qa = 3;
  const Real qb = 2 * (c.v[0] - 3);
  const Real qc = c.v[1];
  const Real disc = qb * qb - 4 * qa * qc;
  if (disc > 0) {
    const Real sq = std::sqrt(disc);
    const Real q = -(qb + std::copysign(sq, qb)) / 2;
    for (Real r : {q / qa, qc / q}) {
      if (r > -bound && r < bound && r != 0) cuts.push_back(r);
    }
  }
  std::sort(cuts.begin(), cuts.end());
  auto f = [&](Real t) { return c.reduced(t); };
  NearestRoots out;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const Real a = cuts[i];
    const Real b = cuts[i + 1];
    const Real fa = f(a);
    const Real fb = f(b);
    if ((fa > 0) == (fb > 0) && fa != 0 && fb != 0) continue;
    const Real root = fa == 0 ? a : (fb == 0 ? b : bisect(f, a, b));
    if (root < 0) {
      if (!out.minus || root > *out.minus) out.minus = root;
    } else if (root > 0) {
      if (!out.plus || root < *out.plus) out.plus = root;
    }
  }
  return out;
}

ExactH solve_h_exact(const AnalyticPoint& pt) {
  if (!(pt.x > concavity_threshold())) {
    throw std::domain_error("solve_h_exact requires x above the concavity threshold");
  }
  const Real x = pt.x;
  const Real eps_x = error_term(x);
  const Real dphi = phi_and_tangent(pt, 0).dphi;
  // L(x+h) + eps(x+h) - (phi'(x) h + phi(x)) with the L(x) terms cancelled.
  auto F = [&](Real h) { return li_between(x, x + h) + error_term(x + h) + eps_x - dphi * h; };

  Real hi = x;
  for (int i = 0; F(hi) > 0; ++i) {
    if (i > 80) throw NumericError("no sign change for the positive root");
    hi *= 2;
  }
  const Real left = 2 - x;
  if (!(F(left) < 0)) {
    throw NumericError("no sign change for the negative root at x = " + std::to_string(static_cast<double>(x)));
  }
  ExactH out;
  out.h_plus = bisect(F, 0, hi);
  out.h_minus = bisect(F, left, 0);
  out.residuals = {std::fabs(F(out.h_minus)), std::fabs(F(out.h_plus))};
  return out;
}

Real working_threshold() {
  static const Real threshold = [] {
    const Real floor = concavity_threshold();
    for (int k = 1; k <= 30; ++k) {
      const Real x = std::pow(10.0L, static_cast<Real>(k));
      if (x <= floor) continue;
      const CubicProblem c = cubic_coeffs(AnalyticPoint(x));
      if (c.A[0] > 0 && c.v[0] + c.v[1] + c.v[2] < 2 && c.v[0] - c.v[1] + c.v[2] < 2) return x;
    }
    throw NumericError("no working threshold below 10^30");
  }();
  return threshold;
}

LensProfile lens_profile(Real x, Real alpha) {
  const AnalyticPoint pt(x);
  LensProfile p;
  p.x = x;
  try {
    p.theta = solve_theta(pt, alpha);
  } catch (const NumericError&) {
    p.theta.reset();
  }
  p.nearest = isolate_theta_roots(cubic_coeffs(pt));
  p.exact = solve_h_exact(pt);
  p.H_over_x = (p.exact.h_plus - p.exact.h_minus) / x;
  p.sandwich = p.nearest.minus && p.nearest.plus && *p.nearest.minus * x < p.exact.h_minus &&
               p.exact.h_minus < 0 && 0 < p.exact.h_plus && p.exact.h_plus < *p.nearest.plus * x;
  return p;
}

}  // namespace extremal::lens
