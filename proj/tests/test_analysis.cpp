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
#include <vector>

#include "extremal/analysis.hpp"
#include "extremal/records.hpp"
#include "support/oracles.hpp"

using namespace extremal;

namespace {

const std::vector<ExtremalRecord>& records_1e6() {
  static const auto recs = compute_extremal(1000000).confirmed;
  return recs;
}

}  // namespace

TEST_CASE("lens_table rows") {
  const auto rows = lens_table(records_1e6());
  REQUIRE(rows.size() >= 5);
  const std::int64_t dpi[] = {1, 2, 4, 7, 6};
  const std::int64_t dp[] = {1, 4, 12, 28, 26};
  for (int i = 0; i < 5; ++i) {
    CHECK(rows[i].delta.identical(ExactSlope{dpi[i], dp[i]}));
    CHECK(rows[i].lens_len == static_cast<std::uint64_t>(dp[i]));
  }
  CHECK(rows[0].ratio_next == 1.5);
  CHECK(rows[3].alpha == ExactSlope{4, 1});
  CHECK(rows[3].alpha_value == 4.0);
  CHECK(rows[0].normalized_len ==
        doctest::Approx(1.0 / (std::sqrt(2.0) * std::log(2.0) * std::log(2.0))));
  CHECK_THROWS_AS(lens_table(std::span(records_1e6()).first(1)), std::invalid_argument);
}

TEST_CASE("delta strictly decreases and alpha strictly increases") {
  const auto& recs = records_1e6();
  bool ok = true;
  for (std::size_t i = 1; i < recs.size(); ++i) {
    ok = ok && *recs[i].delta < *recs[i - 1].delta && *recs[i - 1].alpha() < *recs[i].alpha();
  }
  CHECK(ok);
}

TEST_CASE("conjecture_sums") {
  const auto s = conjecture_sums(std::span(records_1e6()).first(3));
  CHECK(s.count == 3);
  CHECK(s.sum_inv.value() == doctest::Approx(1.0 / 2 + 1.0 / 3 + 1.0 / 7).epsilon(1e-15));
  CHECK(s.sum_invlog.value() == doctest::Approx(2.8668326098855515).epsilon(1e-14));
  const auto s28 = conjecture_sums(std::span(records_1e6()).first(28));
  CHECK(s28.sum_inv.value() == doctest::Approx(1.090014236009687817).epsilon(1e-14));
  CHECK(s28.sum_invlog.value() == doctest::Approx(6.588395504194269710).epsilon(1e-14));

  auto provisional = records_1e6();
  provisional.back().status = VertexStatus::provisional;
  CHECK(conjecture_sums(provisional).count == provisional.size() - 1);
}

TEST_CASE("pi_epsilon") {
  const auto& recs = records_1e6();
  CHECK(pi_epsilon(100, recs) == 6);
  CHECK(pi_epsilon(2, recs) == 1);
  CHECK(pi_epsilon(1, recs) == 0);
  bool ok = true;
  for (const auto& r : recs) ok = ok && pi_epsilon(r.e, recs) == r.k && pi_epsilon(r.e - 1, recs) == r.k - 1;
  CHECK(ok);
  CHECK_THROWS_AS(pi_epsilon(recs.back().e + 1, recs), std::out_of_range);
}

TEST_CASE("exponent_estimate") {
  const auto est = exponent_estimate(records_1e6());
  REQUIRE(!est.empty());
  CHECK(est[0].k == 2);
  CHECK(est[0].ratio == doctest::Approx(0.6309297535714574).epsilon(1e-14));
  const auto big = compute_extremal(10000000).confirmed;
  const auto est7 = exponent_estimate(big);
  CHECK(est7[98].k == 100);
  CHECK(est7[98].ratio == doctest::Approx(0.2976003721580021).epsilon(1e-13));
}

TEST_CASE("find_twins") {
  const auto tw = find_twins(compute_extremal(100000).confirmed);
  REQUIRE(!tw.empty());
  CHECK(tw[0].k == 1);
  CHECK(tw[0].e == 2);
  CHECK(tw[0].e_next == 3);
  for (const auto& t : tw) CHECK(t.k != 2);

  const auto tw7 = find_twins(compute_extremal(10000000).confirmed);
  bool found = false;
  for (const auto& t : tw7) {
    if (t.k == 116) {
      found = true;
      CHECK(t.e == 8787901);
      CHECK(t.e_next == 8787917);
      CHECK(t.pi_e == 589274);
    }
  }
  CHECK(found);
}

TEST_CASE("tie_report lists the known ties") {
  const auto tr = tie_report(records_1e6());
  REQUIRE(tr.size() >= 3);
  CHECK(tr[0].e == 7);
  CHECK(tr[0].ties == std::vector<std::uint64_t>{5});
  CHECK(tr[1].e == 19);
  CHECK(tr[1].ties == std::vector<std::uint64_t>{13});
  CHECK(tr[2].e == 47);
  CHECK(tr[2].ties == std::vector<std::uint64_t>{23, 31, 43});
}

TEST_CASE("mean ratios shrink with k") {
  const auto recs = compute_extremal(100000000).confirmed;
  bool at_least_one = true;
  for (const auto& r : recs) at_least_one = at_least_one && (!r.ratio_next || *r.ratio_next > 1.0);
  CHECK(at_least_one);
  const auto lo = mean_ratio(recs, 1, 28);
  const auto hi = mean_ratio(recs, 100, 200);
  REQUIRE(lo);
  REQUIRE(hi);
  CHECK(*hi < *lo);
  CHECK_FALSE(mean_ratio(recs, 5000, 6000));
}

TEST_CASE("check_concave") {
  const std::vector<PrimePoint> e5{{2, 1}, {3, 2}, {7, 4}, {19, 8}, {47, 15}};
  CHECK(check_concave(e5).concave);
  CHECK(check_concave(std::vector<PrimePoint>{{2, 1}, {3, 2}}).concave);
  const auto p20 = oracle::naive_primes(20);
  const auto c = check_concave(p20);
  CHECK_FALSE(c.concave);
  REQUIRE(c.violation);
  CHECK(*c.violation == 2);  // 3 -> 5 -> 7, both slopes 1/2
  CHECK_THROWS_AS(check_concave(std::vector<PrimePoint>{{3, 2}, {5, 3}}), std::invalid_argument);
}

TEST_CASE("E is the minimal concave sequence through its points") {
  const auto recs = compute_extremal(100000).confirmed;
  const auto pts = oracle::naive_primes(100000);
  std::vector<PrimePoint> e;
  for (const auto& r : recs) e.push_back({r.e, r.pi_e});
  REQUIRE(check_concave(e).concave);
  bool all_break = true;
  std::size_t j = 0;
  for (std::size_t k = 0; k + 1 < e.size(); ++k) {
    while (pts[j].p <= e[k].p) ++j;
    for (; pts[j].p < e[k + 1].p; ++j) {
      auto with = e;
      with.insert(with.begin() + static_cast<std::ptrdiff_t>(k + 1), pts[j]);
      all_break = all_break && !check_concave(with).concave;
    }
  }
  CHECK(all_break);
}

TEST_CASE("verify_envelope") {
  const auto r4 = verify_envelope(10000);
  CHECK(r4.violations.empty());
  REQUIRE(r4.boundary.size() == 1);
  CHECK(r4.boundary[0].p == 2);
  CHECK(r4.boundary[0].ratio == doctest::Approx(1.0 / (std::sqrt(2.0) * std::log(2.0))));

  const auto r6 = verify_envelope(1000000);
  CHECK(r6.violations.empty());
  CHECK(r6.primes_checked == 78498);
  CHECK(r6.max_ratio < 1.0);
  CHECK(r6.argmax == 29);
  CHECK(r6.max_ratio == doctest::Approx(0.09275610952168313).epsilon(1e-10));
  CHECK_THROWS(verify_envelope(2000000000));
}
