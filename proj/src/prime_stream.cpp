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

#include "extremal/prime_stream.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "extremal/errors.hpp"

namespace extremal {

namespace {

constexpr double kRosserSchoenfeld = 1.25506;

// Odd primes up to n, by a plain sieve over odd integers.
std::vector<std::uint64_t> odd_base_primes(std::uint64_t n) {
  std::vector<std::uint64_t> primes;
  if (n < 3) return primes;
  const std::uint64_t count = (n - 1) / 2;  // odd numbers 3..n
  std::vector<std::uint8_t> composite(count + 1, 0);
  for (std::uint64_t i = 1; i <= count; ++i) {
    if (composite[i]) continue;
    const std::uint64_t q = 2 * i + 1;
    primes.push_back(q);
    for (std::uint64_t j = (q * q - 1) / 2; j <= count; j += q) composite[j] = 1;
  }
  return primes;
}

// Sieve of the odd integers [2*first+1, 2*(first+len)-1]; flags[j] == 0 means prime.
void sieve_segment(std::uint64_t first, std::uint64_t len,
                   const std::vector<std::uint64_t>& base,
                   std::vector<std::uint8_t>& flags) {
  flags.assign(len, 0);
  const std::uint64_t lo = 2 * first + 1;
  const std::uint64_t hi = 2 * (first + len) - 1;
  for (const std::uint64_t q : base) {
    const std::uint64_t sq = q * q;
    if (sq > hi) break;
    std::uint64_t m = std::max(sq, (lo + q - 1) / q * q);
    if ((m & 1) == 0) m += q;
    for (std::uint64_t j = (m - 1) / 2 - first; j < len; j += q) flags[j] = 1;
  }
  if (lo == 1) flags[0] = 1;
}

}  // namespace

std::uint64_t isqrt(std::uint64_t n) {
  // The double estimate can be off by one either way; r * r must not wrap.
  auto r = std::min<std::uint64_t>(static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n))),
                                   0xFFFFFFFFULL);
  while (r > 0 && r > n / r) --r;
  while (r < 0xFFFFFFFFULL && (r + 1) <= n / (r + 1)) ++r;
  return r;
}

StreamSummary stream_primes(const SieveConfig& cfg, const PrimeConsumer& consumer,
                            const SegmentObserver& on_segment) {
  if (cfg.limit > kMaxLimit) {
    throw RangeError("limit " + std::to_string(cfg.limit) +
                     " exceeds the supported maximum 10^12");
  }
  if (cfg.segment_size < kMinSegmentSize) {
    throw std::invalid_argument("segment_size must be at least 1024");
  }
  const std::uint64_t start = std::max<std::uint64_t>(cfg.start, 2);
  if (start > cfg.limit) {
    throw std::invalid_argument("start exceeds limit");
  }

  StreamSummary summary;
  std::uint64_t pi = cfg.start_pi;
  auto emit = [&](std::uint64_t p) {
    ++pi;
    const PrimePoint pt{p, pi};
    consumer(pt);
    ++summary.count;
    summary.last = pt;
  };

  if (start == 2) emit(2);

  const std::uint64_t first_odd = std::max<std::uint64_t>(3, start | 1);
  if (first_odd > cfg.limit) {
    if (on_segment) on_segment(cfg.limit, pi);
    return summary;
  }

  const std::vector<std::uint64_t> base = odd_base_primes(isqrt(cfg.limit));
  const std::uint64_t first_index = (first_odd - 1) / 2;
  const std::uint64_t end_index = (cfg.limit - 1) / 2 + 1;  // one past the last odd <= limit
  const std::uint64_t seg = cfg.segment_size;
  const unsigned workers = std::max(1u, cfg.workers);

  std::vector<std::vector<std::uint8_t>> buffers(workers);
  std::uint64_t next = first_index;
  while (next < end_index) {
    // Sieve up to `workers` segments, then hand them over strictly in order.
    std::vector<std::pair<std::uint64_t, std::uint64_t>> batch;
    for (unsigned w = 0; w < workers && next < end_index; ++w) {
      const std::uint64_t len = std::min(seg, end_index - next);
      batch.emplace_back(next, len);
      next += len;
    }
    if (batch.size() == 1) {
      sieve_segment(batch[0].first, batch[0].second, base, buffers[0]);
    } else {
      std::vector<std::jthread> pool;
      pool.reserve(batch.size());
      for (std::size_t w = 0; w < batch.size(); ++w) {
        pool.emplace_back([&, w] {
          sieve_segment(batch[w].first, batch[w].second, base, buffers[w]);
        });
      }
    }
    for (std::size_t w = 0; w < batch.size(); ++w) {
      const auto [firstj, len] = batch[w];
      const auto& flags = buffers[w];
      for (std::uint64_t j = 0; j < len; ++j) {
        if (!flags[j]) emit(2 * (firstj + j) + 1);
      }
      if (on_segment) {
        const std::uint64_t last_odd = 2 * (firstj + len) - 1;
        // last_odd + 1 is even and > 2, so pi is unchanged there.
        on_segment(std::min(last_odd + 1, cfg.limit), pi);
      }
    }
  }
  return summary;
}

double pi_upper_bound(double x) {
  if (!(x > 1.0)) throw std::domain_error("pi_upper_bound requires x > 1");
  return kRosserSchoenfeld * x / std::log(x);
}

double bound_slope(double x) {
  if (!(x > std::exp(2.0))) throw std::domain_error("bound_slope requires x > e^2");
  const double y = std::log(x);
  return kRosserSchoenfeld * (y - 1.0) / (y * y);
}

}  // namespace extremal
