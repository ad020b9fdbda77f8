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

#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "extremal/errors.hpp"
#include "extremal/prime_stream.hpp"
#include "support/oracles.hpp"

using namespace extremal;

namespace {

std::vector<PrimePoint> collect(const SieveConfig& cfg) {
  std::vector<PrimePoint> out;
  stream_primes(cfg, [&](const PrimePoint& p) { out.push_back(p); });
  return out;
}

}  // namespace

TEST_CASE("stream matches the naive sieve") {
  for (std::uint64_t n : {1000ULL, 10000ULL, 100000ULL, 1000000ULL}) {
    CAPTURE(n);
    CHECK(collect({.limit = n}) == oracle::naive_primes(n));
  }
}

TEST_CASE("small limits and edge values") {
  CHECK(collect({.limit = 2}) == std::vector<PrimePoint>{{2, 1}});
  CHECK(collect({.limit = 3}) == std::vector<PrimePoint>{{2, 1}, {3, 2}});
  const auto s = stream_primes({.limit = 100}, [](const PrimePoint&) {});
  CHECK(s.count == 25);
  REQUIRE(s.last);
  CHECK(*s.last == PrimePoint{97, 25});
  CHECK(stream_primes({.limit = 1000000}, [](const PrimePoint&) {}).count == 78498);
}

TEST_CASE("segment size and worker count do not change the stream") {
  const auto ref = collect({.limit = 1000000, .segment_size = 1024});
  CHECK(ref == collect({.limit = 1000000, .segment_size = 1u << 20}));
  CHECK(ref == collect({.limit = 1000000, .segment_size = 4096, .workers = 3}));
}

TEST_CASE("resuming with start_pi reproduces the stream") {
  const std::uint64_t n = 1000000;
  const auto ref = collect({.limit = n});
  std::mt19937_64 rng(20260101);
  std::uniform_int_distribution<std::uint64_t> pick(3, n - 1);
  for (int trial = 0; trial < 10; ++trial) {
    const std::uint64_t m = pick(rng);
    CAPTURE(m);
    auto head = collect({.limit = m, .segment_size = 8192});
    const std::uint64_t pi_m = head.empty() ? 0 : head.back().pi;
    const auto tail = collect({.limit = n, .segment_size = 16384, .start = m + 1, .start_pi = pi_m});
    head.insert(head.end(), tail.begin(), tail.end());
    CHECK(head == ref);
  }
}

TEST_CASE("segment observer reports exact counts at increasing positions") {
  const auto ref = oracle::naive_primes(200000);
  std::uint64_t last_x = 0;
  bool ok = true;
  stream_primes({.limit = 200000, .segment_size = 1024}, [](const PrimePoint&) {},
                [&](std::uint64_t x, std::uint64_t pi_x) {
                  ok = ok && x > last_x && x <= 200000;
                  last_x = x;
                  std::uint64_t expect = 0;
                  for (const auto& p : ref) expect += p.p <= x;
                  ok = ok && expect == pi_x;
                });
  CHECK(ok);
  CHECK(last_x == 200000);
}

TEST_CASE("configuration errors") {
  CHECK_THROWS_AS(collect({.limit = kMaxLimit + 1}), RangeError);
  CHECK_THROWS_AS(collect({.limit = 1000, .segment_size = 10}), std::invalid_argument);
  CHECK_THROWS_AS(collect({.limit = 100, .start = 200}), std::invalid_argument);
}

TEST_CASE("pi_upper_bound values") {
  CHECK(pi_upper_bound(10) == doctest::Approx(5.450656324574953).epsilon(1e-13));
  CHECK(pi_upper_bound(1e6) == doctest::Approx(90844.27207624921).epsilon(1e-13));
  CHECK(bound_slope(200) == doctest::Approx(0.19217063684732322).epsilon(1e-13));
  CHECK(bound_slope(1e9) == doctest::Approx(0.057640391304519274).epsilon(1e-13));
  CHECK_THROWS_AS(pi_upper_bound(1.0), std::domain_error);
  CHECK_THROWS_AS(bound_slope(7.0), std::domain_error);
}

TEST_CASE("pi_upper_bound exceeds pi at every prime up to 10^6") {
  bool ok = true;
  for (const auto& p : oracle::naive_primes(1000000)) {
    ok = ok && pi_upper_bound(static_cast<double>(p.p)) > static_cast<double>(p.pi);
  }
  CHECK(ok);
}

TEST_CASE("isqrt") {
  CHECK(isqrt(0) == 0);
  CHECK(isqrt(99) == 9);
  CHECK(isqrt(100) == 10);
  CHECK(isqrt(~std::uint64_t{0}) == 4294967295ULL);
  CHECK(isqrt(999999999999ULL) == 999999);
}
