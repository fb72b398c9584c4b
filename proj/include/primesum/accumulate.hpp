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
#include <vector>

#include "primesum/double_double.hpp"
#include "primesum/neumaier.hpp"

namespace primesum {

/// One prime p_n with its weight a_n = sqrt(log p / p) and a_n^2 = log p / p.
struct WeightedPrimeTerm {
  std::uint64_t index = 0;  // n, 1-based
  std::uint64_t prime = 0;
  double weight = 0.0;
  double weight_sq = 0.0;
};

/// Throws DomainError for prime < 2 or index == 0.
WeightedPrimeTerm make_term(std::uint64_t index, std::uint64_t prime);

/// Running sums S_n, M_n and the telescoped jump sum over the first n primes.
///
/// S and M use compensated accumulation. E_incremental accumulates the jumps
/// 2 a_n S_{n-1} independently of S^2 - M, so the two routes to E can be
/// compared at any point.
class SumState {
 public:
  SumState() = default;

  /// Absorbs the next term. Throws SequencingError unless
  /// term.index == n() + 1 and term.prime > last_prime().
  void push(const WeightedPrimeTerm& term);

  /// make_term(n() + 1, prime) followed by push.
  void push_prime(std::uint64_t prime);

  std::uint64_t n() const { return n_; }
  std::uint64_t last_prime() const { return last_prime_; }
  double S() const { return s_.value(); }
  double M() const { return m_.value(); }
  /// S^2 - M from the current sums.
  double E() const;
  double E_incremental() const { return e_.value(); }
  /// S^2 - M evaluated in double-double from the compensated sums.
  DoubleDouble E_extended() const;

  const NeumaierSum& S_sum() const { return s_; }
  const NeumaierSum& M_sum() const { return m_; }
  const NeumaierSum& E_sum() const { return e_; }

  /// Rebuilds a state from serialized fields (checkpoint resume).
  static SumState restore(std::uint64_t n, std::uint64_t last_prime,
                          NeumaierSum s, NeumaierSum m, NeumaierSum e);

  friend bool operator==(const SumState&, const SumState&) = default;

 private:
  std::uint64_t n_ = 0;
  std::uint64_t last_prime_ = 0;
  NeumaierSum s_;
  NeumaierSum m_;
  NeumaierSum e_;
};

/// Immutable view of the sums at a point x, with the derived ratios.
struct Checkpoint {
  double x = 0.0;
  std::uint64_t pi = 0;
  double S = 0.0;
  double M = 0.0;
  double E = 0.0;
  double r_S = 0.0;                // S / sqrt(x / log x)
  double r_E_pi = 0.0;             // E / pi(x)
  double r_E_x = 0.0;              // E log x / x
  double mertens_remainder = 0.0;  // M - log x
};

/// Snapshot of the state at x. The sums over p <= x equal the state only when
/// last_prime <= x < next_prime; next_prime is the first prime not yet
/// absorbed, or nullopt when unknown. Violations throw SequencingError.
/// Ratio fields are populated for x >= 3 and left NaN below that.
Checkpoint snapshot(const SumState& state, double x,
                    std::optional<std::uint64_t> next_prime = std::nullopt);

/// Geometric grid x_start * ratio^k below x_max, with x_max as final point.
/// Throws ConfigError for ratio <= 1, x_start < 3 or x_max < x_start.
std::vector<double> grid_points(double x_start, double x_max, double ratio);

/// The k-th point x_start * ratio^k of the (unclipped) geometric lattice.
double lattice_point(double x_start, double ratio, int k);

}  // namespace primesum
