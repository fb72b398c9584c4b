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

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "primesum/accumulate.hpp"

namespace primesum {

/// Outcome of one check.
///
/// Equality checks use residual = |lhs - rhs| / max(1, |rhs|). Inequality
/// checks of the form lhs >= rhs use the one-sided violation
/// max(0, rhs - lhs) / max(1, |lhs|). In both cases pass <=> residual <= tolerance.
struct VerificationRecord {
  enum class Kind { kEquality, kLowerBound, kRelative };
  /// What `location` measures.
  enum class Axis { kNone, kIndex, kX, kT };

  std::string check_id;
  double location = 0.0;  // n or x where the check was evaluated
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  Kind kind = Kind::kEquality;
  Axis axis = Axis::kNone;
};

VerificationRecord make_equality_record(std::string check_id, double location,
                                        double lhs, double rhs,
                                        double tolerance);

/// Record for the claim lhs >= rhs with relative slack `tolerance`.
VerificationRecord make_lower_bound_record(std::string check_id,
                                           double location, double lhs,
                                           double rhs, double tolerance);

/// Plain relative error |lhs - rhs| / |rhs|, for quantities far below 1.
VerificationRecord make_relative_record(std::string check_id, double location,
                                        double lhs, double rhs, double tolerance);

/// Record counting violations of a discrete property: lhs = count, passes
/// when the count is zero.
VerificationRecord make_count_record(std::string check_id, double location,
                                     std::uint64_t violations);

inline constexpr std::size_t kMaxPairTerms = 10'000;
inline constexpr double kPairTolerance = 1e-10;
inline constexpr double kJumpTolerance = 1e-9;
inline constexpr double kMaxJumpCheckX = 1e8;

/// 2 * sum_{i<j} a_i a_j by direct double loop. Throws SizeError above
/// kMaxPairTerms terms.
double pair_sum_bruteforce(std::span<const WeightedPrimeTerm> terms);

/// The first n weighted primes.
std::vector<WeightedPrimeTerm> first_terms(std::size_t n);

/// Fault injection for the negative tests: the weight of term `index` is
/// shifted by `delta` on the accumulator side only.
struct WeightPerturbation {
  std::uint64_t index = 0;
  double delta = 0.0;
};

/// For n in {1, 2, 4, ...} below n_max plus n_max itself, compares
/// S_n^2 - M_n (streamed) with the brute-force pair sum.
/// Throws SizeError for n_max > kMaxPairTerms.
std::vector<VerificationRecord> check_pair_identity(
    std::size_t n_max, std::optional<WeightPerturbation> fault = std::nullopt,
    double tolerance = kPairTolerance);

/// Max over all primes p_n <= x_max of
/// |(E_n - E_{n-1}) - 2 a_n S_{n-1}| / max(1, 2 a_n S_{n-1}), with E_n taken
/// in double-double from the compensated sums.
/// Throws DomainError for x_max > kMaxJumpCheckX.
VerificationRecord check_jump_identity(
    double x_max, std::optional<WeightPerturbation> fault = std::nullopt,
    double tolerance = kJumpTolerance, unsigned threads = 1);

/// Passes iff E >= 0 everywhere and E never decreases along the sequence.
VerificationRecord check_E_monotone(std::span<const Checkpoint> checkpoints);

/// Weights a_n strictly decrease over primes 3 <= p <= x_max.
VerificationRecord check_weight_monotone(double x_max, unsigned threads = 1);

/// Logarithmic subsample {1, 2, 4, ...} < n_max plus n_max.
std::vector<std::size_t> log_subsample(std::size_t n_max);

}  // namespace primesum
