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

// Reference implementations for tests. They share no code with the library
// beyond the PrimePoint struct.

#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "extremal/prime_stream.hpp"

namespace oracle {

using extremal::PrimePoint;

/// Plain sieve of Eratosthenes over [0, n].
inline std::vector<PrimePoint> naive_primes(std::uint64_t n) {
  std::vector<bool> composite(n + 1, false);
  std::vector<PrimePoint> out;
  std::uint64_t count = 0;
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    out.push_back({i, ++count});
    for (std::uint64_t j = i * i; j <= n; j += i) composite[j] = true;
  }
  return out;
}

struct Vertex {
  PrimePoint point;
  std::vector<std::uint64_t> ties;  // primes exactly on the edge arriving here

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

// (b - a) x (c - a) for points given as (p, pi).
inline __int128 cross(const PrimePoint& a, const PrimePoint& b, const PrimePoint& c) {
  const __int128 bx = static_cast<__int128>(b.p) - a.p;
  const __int128 by = static_cast<__int128>(b.pi) - a.pi;
  const __int128 cx = static_cast<__int128>(c.p) - a.p;
  const __int128 cy = static_cast<__int128>(c.pi) - a.pi;
  return bx * cy - by * cx;
}

/// Andrew's monotone chain upper hull without collinear vertices, followed by
/// an exact scan for the points lying on each edge.
inline std::vector<Vertex> batch_hull(const std::vector<PrimePoint>& pts) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (idx.size() >= 2 && cross(pts[idx[idx.size() - 2]], pts[idx.back()], pts[i]) >= 0) {
      idx.pop_back();
    }
    idx.push_back(i);
  }
  std::vector<Vertex> out;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    Vertex v{pts[idx[k]], {}};
    if (k > 0) {
      for (std::size_t j = idx[k - 1] + 1; j < idx[k]; ++j) {
        if (cross(pts[idx[k - 1]], pts[idx[k]], pts[j]) == 0) v.ties.push_back(pts[j].p);
      }
    }
    out.push_back(std::move(v));
  }
  return out;
}

using boost::multiprecision::cpp_rational;

/// Upper hull of (p, p / pi(p)) in arbitrary-precision rationals.
inline std::vector<Vertex> batch_m_hull(const std::vector<PrimePoint>& pts) {
  auto y = [](const PrimePoint& q) { return cpp_rational(q.p, q.pi); };
  auto turn = [&](const PrimePoint& a, const PrimePoint& b, const PrimePoint& c) {
    return (cpp_rational(b.p) - a.p) * (y(c) - y(a)) - (y(b) - y(a)) * (cpp_rational(c.p) - a.p);
  };
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (idx.size() >= 2 && turn(pts[idx[idx.size() - 2]], pts[idx.back()], pts[i]) >= 0) {
      idx.pop_back();
    }
    idx.push_back(i);
  }
  std::vector<Vertex> out;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    Vertex v{pts[idx[k]], {}};
    if (k > 0) {
      for (std::size_t j = idx[k - 1] + 1; j < idx[k]; ++j) {
        if (turn(pts[idx[k - 1]], pts[idx[k]], pts[j]) == 0) v.ties.push_back(pts[j].p);
      }
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace oracle
