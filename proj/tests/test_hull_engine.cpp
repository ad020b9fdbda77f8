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

#include <random>
#include <vector>

#include "extremal/errors.hpp"
#include "extremal/hull_engine.hpp"
#include "extremal/records.hpp"
#include "support/oracles.hpp"

using namespace extremal;

namespace {

std::vector<std::uint64_t> vertex_primes(const HullState& st, std::size_t n) {
  std::vector<std::uint64_t> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(st.stack[i].point.p);
  return out;
}

std::vector<oracle::Vertex> as_oracle(const HullState& st) {
  std::vector<oracle::Vertex> out;
  for (const auto& v : st.stack) {
    oracle::Vertex o{v.point, {}};
    for (const auto& t : v.collinear_predecessors) o.ties.push_back(t.p);
    out.push_back(std::move(o));
  }
  return out;
}

HullState run_to(std::uint64_t limit, std::uint64_t segment = 1u << 18) {
  HullState st;
  extend_hull(st, limit, {.segment_size = segment});
  return st;
}

}  // namespace

TEST_CASE("slope_compare examples") {
  CHECK(slope_compare({2, 1}, {3, 2}, {7, 4}) == std::strong_ordering::greater);
  CHECK(slope_compare({19, 8}, {23, 9}, {47, 15}) == std::strong_ordering::equal);
  CHECK(slope_compare({2, 1}, {5, 3}, {7, 4}) == std::strong_ordering::greater);
  CHECK(slope_compare({2, 1}, {3, 2}, {5, 4}) == std::strong_ordering::equal);
  CHECK(slope_compare({2, 1}, {3, 2}, {5, 5}) == std::strong_ordering::less);
  CHECK_THROWS_AS(slope_compare({3, 2}, {2, 1}, {5, 3}), std::invalid_argument);
  CHECK_THROWS_AS(slope_compare({2, 1}, {5, 3}, {5, 3}), std::invalid_argument);
}

TEST_CASE("ExactSlope arithmetic") {
  const ExactSlope a{1, 2}, b{2, 4}, c{9, 40};
  CHECK(a == b);
  CHECK_FALSE(a.identical(b));
  CHECK(c < a);
  CHECK(ExactSlope::between({73, 21}, {113, 30}).identical(c));
  CHECK(c.to_string() == "9/40");
  // Products near the 10^12 cap stay exact.
  const ExactSlope big1{37607912018LL - 1, 999999999989LL - 2};
  const ExactSlope big2{37607912018LL - 2, 999999999989LL - 3};
  CHECK((big1 <=> big2) != std::strong_ordering::equal);
}

TEST_CASE("push_point examples") {
  HullState st;
  push_point(st, {2, 1});
  push_point(st, {3, 2});
  CHECK(vertex_primes(st, st.stack.size()) == std::vector<std::uint64_t>{2, 3});
  push_point(st, {5, 3});
  CHECK(st.stack.size() == 3);
  push_point(st, {7, 4});
  CHECK(vertex_primes(st, st.stack.size()) == std::vector<std::uint64_t>{2, 3, 7});
  REQUIRE(st.stack.back().collinear_predecessors.size() == 1);
  CHECK(st.stack.back().collinear_predecessors[0] == PrimePoint{5, 3});

  HullState st50;
  for (const auto& p : oracle::naive_primes(50)) push_point(st50, p);
  CHECK(vertex_primes(st50, st50.stack.size()) == std::vector<std::uint64_t>{2, 3, 7, 19, 47});
  std::vector<std::uint64_t> ties;
  for (const auto& t : st50.stack.back().collinear_predecessors) ties.push_back(t.p);
  CHECK(ties == std::vector<std::uint64_t>{23, 31, 43});
  CHECK_THROWS_AS(push_point(st50, {47, 15}), std::invalid_argument);
}

TEST_CASE("a Less pop discards ties collected on the popped edge") {
  HullState st;
  for (PrimePoint q : {PrimePoint{0, 0}, {2, 1}, {4, 2}, {6, 3}}) push_point(st, q);
  CHECK(st.stack.size() == 2);
  CHECK(st.stack.back().collinear_predecessors.size() == 2);
  push_point(st, {8, 5});
  CHECK(st.stack.size() == 2);
  CHECK(st.stack.back().collinear_predecessors.empty());
}

TEST_CASE("push_point refuses to pop a confirmed vertex") {
  HullState st;
  push_point(st, {2, 1});
  push_point(st, {3, 2});
  push_point(st, {5, 3});
  st.confirmed_prefix_len = 3;
  CHECK_THROWS_AS(push_point(st, {7, 4}), std::logic_error);
}

TEST_CASE("try_confirm at x = 200") {
  HullState st = run_to(200);
  CHECK(vertex_primes(st, st.confirmed_prefix_len) ==
        std::vector<std::uint64_t>{2, 3, 7, 19, 47, 73, 113});
  REQUIRE(st.stack.size() == 8);
  CHECK(st.stack[7].point.p == 199);
  CHECK(st.stack[7].status == VertexStatus::provisional);
  CHECK(rosser_schoenfeld_condition({73, 21}, ExactSlope{9, 40}, 200));
}

TEST_CASE("try_confirm at x = 10") {
  HullState st;
  for (PrimePoint q : {PrimePoint{2, 1}, {3, 2}, {5, 3}, {7, 4}}) push_point(st, q);
  advance(st, 10, 4);
  // 2 and 3 are final on sight; 7 is certified because 1.25506 * 10 / ln 10
  // = 5.4507 lies below the line 2 + (x - 3) / 2 = 5.5 and the bound's slope
  // is already below 1/2.
  CHECK(try_confirm(st) == 3);
  CHECK(st.confirmed_prefix_len == 3);
  CHECK(try_confirm(st) == 0);
  CHECK(rosser_schoenfeld_condition({3, 2}, ExactSlope{2, 4}, 10));
  CHECK_FALSE(certifies(PiBound::rosser_schoenfeld, {3, 2}, ExactSlope{2, 4}, 9));
}

TEST_CASE("certificates are conservative at small x") {
  CHECK_FALSE(certifies(PiBound::rosser_schoenfeld, {3, 2}, ExactSlope{2, 4}, 7));
  CHECK_FALSE(certifies(PiBound::dusart, {73, 21}, ExactSlope{9, 40}, 30));
  CHECK_FALSE(rosser_schoenfeld_condition({73, 21}, ExactSlope{9, 40}, 7));
}

TEST_CASE("streaming hull equals the batch oracle") {
  for (std::uint64_t n : {1000ULL, 10000ULL, 100000ULL, 1000000ULL}) {
    CAPTURE(n);
    const HullState st = run_to(n, 2048);
    CHECK(as_oracle(st) == oracle::batch_hull(oracle::naive_primes(n)));
  }
}

TEST_CASE("hull invariants up to 10^6") {
  const HullState st = run_to(1000000);
  const auto pts = oracle::naive_primes(1000000);
  CHECK(st.stack.front().point == PrimePoint{2, 1});
  CHECK(st.confirmed_prefix_len <= st.stack.size());
  bool decreasing = true;
  for (std::size_t i = 2; i < st.stack.size(); ++i) {
    decreasing = decreasing && slope_compare(st.stack[i - 2].point, st.stack[i - 1].point,
                                             st.stack[i].point) == std::strong_ordering::greater;
  }
  CHECK(decreasing);
  bool dominated = true;
  std::size_t j = 0;
  for (std::size_t k = 0; k + 1 < st.stack.size(); ++k) {
    const auto a = st.stack[k].point, b = st.stack[k + 1].point;
    while (pts[j].p <= a.p) ++j;
    for (; pts[j].p < b.p; ++j) dominated = dominated && oracle::cross(a, b, pts[j]) <= 0;
  }
  CHECK(dominated);
}

TEST_CASE("confirmed prefixes are stable across randomized runs") {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<std::uint64_t> lim(1000, 1000000);
  std::uniform_int_distribution<int> seg(10, 20);
  const HullState ref = run_to(2000000);
  const auto full = vertex_primes(ref, ref.confirmed_prefix_len);
  for (int trial = 0; trial < 20; ++trial) {
    const std::uint64_t a = lim(rng);
    const std::uint64_t seg_size = std::uint64_t{1} << seg(rng);
    CAPTURE(a);
    CAPTURE(seg_size);
    HullState st = run_to(a, seg_size);
    const auto before = vertex_primes(st, st.confirmed_prefix_len);
    extend_hull(st, 2 * a, {.segment_size = seg_size});
    const auto after = vertex_primes(st, st.confirmed_prefix_len);
    REQUIRE(before.size() <= after.size());
    CHECK(std::equal(before.begin(), before.end(), after.begin()));
    REQUIRE(after.size() <= full.size());
    CHECK(std::equal(after.begin(), after.end(), full.begin()));
  }
}

TEST_CASE("extension from 10^6 to 2*10^6 keeps the confirmed prefix") {
  HullState st = run_to(1000000);
  const auto before = std::vector<HullVertex>(st.stack.begin(), st.stack.begin() + st.confirmed_prefix_len);
  extend_hull(st, 2000000, {});
  REQUIRE(st.confirmed_prefix_len >= before.size());
  CHECK(std::equal(before.begin(), before.end(), st.stack.begin()));
  CHECK(st == run_to(2000000));
}

TEST_CASE("compute_extremal") {
  const auto run = compute_extremal(100000);
  const std::vector<std::uint64_t> head{2, 3, 7, 19, 47, 73, 113, 199, 283, 467, 661, 887, 1129};
  REQUIRE(run.confirmed.size() >= head.size());
  for (std::size_t i = 0; i < head.size(); ++i) CHECK(run.confirmed[i].e == head[i]);
  CHECK(run.confirmed[0].k == 1);
  CHECK(run.confirmed[0].delta->identical(ExactSlope{1, 1}));
  CHECK(run.confirmed[0].ratio_next == 1.5);

  const auto small = compute_extremal(100);
  REQUIRE(small.confirmed.size() >= 4);
  std::vector<std::uint64_t> all;
  for (const auto& r : small.confirmed) all.push_back(r.e);
  for (const auto& v : small.provisional_tail) all.push_back(v.point.p);
  CHECK(all == std::vector<std::uint64_t>{2, 3, 7, 19, 47, 73, 83, 89, 97});

  const auto ten7 = compute_extremal(10000000);
  REQUIRE(ten7.confirmed.size() >= 100);
  CHECK(ten7.confirmed[99].e == 5253173);
  CHECK(ten7.confirmed[99].pi_e == 364901);

  const auto two = compute_extremal(2);
  REQUIRE(two.confirmed.size() == 1);
  CHECK(two.confirmed[0].e == 2);
  CHECK_FALSE(two.confirmed[0].delta);
  CHECK_THROWS_AS(compute_extremal(1), std::invalid_argument);
  CHECK_THROWS_AS(compute_extremal(kMaxLimit + 1), RangeError);
}
