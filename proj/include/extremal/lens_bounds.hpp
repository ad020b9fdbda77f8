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

#include <array>
#include <optional>

namespace extremal::lens {

using Real = long double;

/// A point x > 2 with y = ln x cached.
struct AnalyticPoint {
  Real x;
  Real y;

  explicit AnalyticPoint(Real x_value);
};

/// L(x): the integral of 1/ln t over [2, x]. Relative error below 1e-12.
Real li(Real x);

/// Integral of 1/ln t over [a, b] for 2 <= a <= b (or b <= a, negated).
Real li_between(Real a, Real b);

/// Running L(x) over increasing x, integrating only the new stretch on each
/// call. Suited to walking primes in order.
class LiAccumulator {
 public:
  Real advance_to(Real x);
  Real position() const { return position_; }
  Real value() const { return sum_ + compensation_; }

 private:
  Real position_ = 2;
  Real sum_ = 0;
  Real compensation_ = 0;
};

/// Error term sqrt(x) ln x.
Real error_term(Real x);

struct Derivatives {
  std::array<Real, 5> li;   // li[0] = L(x), li[i] = L^(i)(x)
  std::array<Real, 5> eps;  // eps[0] = eps(x), eps[i] = eps^(i)(x)
};

/// L and eps with their first four derivatives at x.
Derivatives derivatives(const AnalyticPoint& pt);

/// Third-order Taylor polynomials of L and eps centred at x.
Real taylor_li(const AnalyticPoint& pt, Real h);
Real taylor_eps(const AnalyticPoint& pt, Real h);

struct PhiTangent {
  Real phi;      // L(x) - eps(x)
  Real dphi;     // 1/y - (y + 2) / (2 sqrt x)
  Real tangent;  // dphi * h + phi
};

PhiTangent phi_and_tangent(const AnalyticPoint& pt, Real h);

/// phi''(x) = (y^3 - 4 sqrt x) / (4 x sqrt x y^2).
Real phi_second(Real x);

/// Largest root of y^3 = 4 sqrt(x); phi is concave to its right.
Real concavity_threshold();

/// W_x(h) = A3 h^3 + A2 h^2 + A1 h + A0 and its normal forms
///   h^3 + B2 h^2 + B1 h + B0                    (divided by A3)
///   theta^3 - 3 theta^2 + v2 theta^2 + v1 theta + v0,   h = theta x.
struct CubicProblem {
  Real x;
  std::array<Real, 4> A;  // A3, A2, A1, A0
  std::array<Real, 3> B;  // B2, B1, B0
  std::array<Real, 3> v;  // v2, v1, v0

  Real w(Real h) const;
  Real monic(Real h) const;
  Real reduced(Real theta) const;
  Real reduced_slope(Real theta) const;
  Real coefficient_scale() const;
};

CubicProblem cubic_coeffs(const AnalyticPoint& pt);

struct ThetaRoots {
  Real theta_minus;
  Real theta_plus;
  std::array<Real, 2> residuals;  // normalised |f(theta)| at each root
  Real h_minus_star;              // theta_minus * x
  Real h_plus_star;
};

/// Roots of the reduced cubic in [-alpha, alpha], 0 < alpha <= 1. Requires
///   v2 a^2 + v1 a + v0 < 2 a^2  and  v2 a^2 - v1 a + v0 < 2 a^2,
/// and throws NumericError when they fail.
ThetaRoots solve_theta(const AnalyticPoint& pt, Real alpha);

struct NearestRoots {
  std::optional<Real> minus;  // largest negative root
  std::optional<Real> plus;   // smallest positive root
};

/// Real roots of the reduced cubic closest to 0 on either side, by splitting
/// the line at the critical points and bisecting each monotone piece.
NearestRoots isolate_theta_roots(const CubicProblem& cubic);

struct ExactH {
  Real h_minus;
  Real h_plus;
  std::array<Real, 2> residuals;  // |L(x+h) + eps(x+h) - l(x, h)| at each root
};

/// Both roots of L(x+h) + eps(x+h) = phi'(x) h + phi(x). Requires
/// x > concavity_threshold().
ExactH solve_h_exact(const AnalyticPoint& pt);

/// Smallest decade 10^k above the concavity threshold at which A3 > 0 and
/// the alpha = 1 root preconditions hold.
Real working_threshold();

/// Everything the grid report needs at one x.
struct LensProfile {
  Real x;
  std::optional<ThetaRoots> theta;  // solve_theta at the given alpha
  NearestRoots nearest;             // unrestricted
  ExactH exact;
  Real H_over_x;
  /// h*- < h- < 0 < h+ < h*+, using the unrestricted roots.
  bool sandwich;
};

LensProfile lens_profile(Real x, Real alpha);

}  // namespace extremal::lens
