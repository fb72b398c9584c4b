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
#include <functional>
#include <span>

#include "primesum/accumulate.hpp"
#include "primesum/neumaier.hpp"
#include "primesum/verify.hpp"

namespace primesum {

// Weight functions on t > 1 (natural log). All throw DomainError for t <= 1.

/// w(t) = sqrt(log t / t).
double eval_w(double t);
/// w'(t) = (1 - log t) / (2 t^{3/2} sqrt(log t)); negative for t > e.
double eval_w_prime(double t);
/// h(t) = sqrt(t / log t) = 1 / w(t).
double eval_h(double t);
/// h'(t) = (log t - 1) / (2 sqrt(t) (log t)^{3/2}); positive for t > e.
double eval_h_prime(double t);

/// Adaptive Simpson integration of f over [a, b].
///
/// Subintervals are accepted when the Richardson error estimate falls below
/// tol * (1 + |coarse estimate of the whole integral|), split
/// proportionally. Throws NumericError when a subinterval needs more than
/// kMaxQuadratureDepth halvings, DomainError when a >= b or tol <= 0.
inline constexpr int kMaxQuadratureDepth = 60;
double quadrature(const std::function<double(double)>& f, double a, double b,
                  double tol);

/// The three members of S(x) = h(x) M(x) - \int_2^x M(t) h'(t) dt.
struct AbelDecomposition {
  double x = 0.0;
  double direct_S = 0.0;
  double boundary_term = 0.0;  // h(x) M(x)
  double integral_term = 0.0;  // exact integral of the step function M times h'
  double residual = 0.0;       // |direct_S - (boundary - integral)| / direct_S
};

/// Streaming form of the Abel decomposition.
///
/// M is constant on [p_k, p_{k+1}), so its integral against h' telescopes to
/// sum_k M(p_k) (h(p_{k+1}) - h(p_k)) with no quadrature error.
class AbelAccumulator {
 public:
  AbelAccumulator() = default;

  /// Absorbs the next prime; `state_before` holds the sums over the primes
  /// already absorbed. Call before pushing the same term into the state.
  void absorb(const SumState& state_before, const WeightedPrimeTerm& term);

  /// Decomposition at x >= last absorbed prime, given the matching state.
  AbelDecomposition decompose(const SumState& state, double x) const;

  const NeumaierSum& integral() const { return integral_; }
  double last_h() const { return last_h_; }

  static AbelAccumulator restore(NeumaierSum integral, double last_h);

  friend bool operator==(const AbelAccumulator&, const AbelAccumulator&) =
      default;

 private:
  NeumaierSum integral_;
  double last_h_ = 0.0;  // h at the last absorbed prime, 0 before the first
};

/// Abel decomposition at x over the given ascending primes (all must be <= x).
/// Throws DomainError for x < 2.
AbelDecomposition abel_decompose(double x, std::span<const std::uint64_t> primes);

/// lhs = h(x) log x - \int_2^x log t h'(t) dt and
/// rhs = h(2) log 2 + \int_2^x dt / sqrt(t log t), each by quadrature at tol;
/// passes when the relative difference is within 10 tol.
/// Throws DomainError for x < 2 or tol < 1e-12.
VerificationRecord main_term_identity(double x, double tol);

/// (\int_2^x dt / sqrt(t log t)) / sqrt(x / log x). Zero at x = 2.
double main_term_growth(double x, double tol = 1e-10);

}  // namespace primesum
