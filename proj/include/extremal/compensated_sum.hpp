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

#include <cmath>

namespace extremal {

/// Neumaier-compensated running sum of doubles. The (sum, compensation)
/// pair is the complete state, so restoring both continues bit-exactly.
class CompensatedSum {
 public:
  CompensatedSum() = default;
  CompensatedSum(double sum, double compensation) : sum_(sum), compensation_(compensation) {}

  void add(double value) {
    const double t = sum_ + value;
    if (std::fabs(sum_) >= std::fabs(value)) {
      compensation_ += (sum_ - t) + value;
    } else {
      compensation_ += (value - t) + sum_;
    }
    sum_ = t;
  }

  double value() const { return sum_ + compensation_; }
  double sum() const { return sum_; }
  double compensation() const { return compensation_; }

  friend bool operator==(const CompensatedSum&, const CompensatedSum&) = default;

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

}  // namespace extremal
