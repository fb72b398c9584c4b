// Copyright 2026 The primesum Authors
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

namespace primesum {

/// Neumaier's improved Kahan-Babuska summation.
///
/// Unlike plain Kahan summation the correction stays valid when the incoming
/// term is larger in magnitude than the running sum. The pair (sum, residue)
/// is the complete state, so it can be serialized and restored exactly.
class NeumaierSum {
 public:
  NeumaierSum() = default;
  NeumaierSum(double sum, double residue) : sum_(sum), residue_(residue) {}

  void add(double value) {
    const double t = sum_ + value;
    if (std::fabs(sum_) >= std::fabs(value)) {
      residue_ += (sum_ - t) + value;
    } else {
      residue_ += (value - t) + sum_;
    }
    sum_ = t;
  }

  NeumaierSum& operator+=(double value) {
    add(value);
    return *this;
  }

  /// Compensated value of the sum.
  double value() const { return sum_ + residue_; }

  double raw_sum() const { return sum_; }
  double residue() const { return residue_; }

  friend bool operator==(const NeumaierSum&, const NeumaierSum&) = default;

 private:
  double sum_ = 0.0;
  double residue_ = 0.0;
};

}  // namespace primesum
