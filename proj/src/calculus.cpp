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

#include "primesum/calculus.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "primesum/error.hpp"

namespace primesum {

namespace {

double checked_log(double t) {
  if (!(t > 1.0)) {
    throw DomainError("weight functions need t > 1, got " + std::to_string(t));
  }
  return std::log(t);
}

}  // namespace

double eval_w(double t) {
  const double l = checked_log(t);
  return std::sqrt(l / t);
}

double eval_w_prime(double t) {
  const double l = checked_log(t);
  return (1.0 - l) / (2.0 * t * std::sqrt(t) * std::sqrt(l));
}

double eval_h(double t) {
  const double l = checked_log(t);
  return std::sqrt(t / l);
}

double eval_h_prime(double t) {
  const double l = checked_log(t);
  return (l - 1.0) / (2.0 * std::sqrt(t) * l * std::sqrt(l));
}

namespace {

struct Simpson {
  const std::function<double(double)>& f;
  double eps_per_unit;  // error budget per unit length

  double refine(double a, double fa, double m, double fm, double b, double fb,
                double whole, int depth) const {
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    const double eps = eps_per_unit * (b - a);
    if (std::fabs(delta) <= 15.0 * eps || !(lm > a && rm < b)) {
      if (!std::isfinite(delta)) {
        throw NumericError("quadrature hit a non-finite value near t = " +
                           std::to_string(m));
      }
      return left + right + delta / 15.0;
    }
    if (depth >= kMaxQuadratureDepth) {
      throw NumericError("quadrature did not converge on [" + std::to_string(a) +
                         ", " + std::to_string(b) + "]: error estimate " +
                         std::to_string(std::fabs(delta) / 15.0) +
                         " exceeds target " + std::to_string(eps));
    }
    return refine(a, fa, lm, flm, m, fm, left, depth + 1) +
           refine(m, fm, rm, frm, b, fb, right, depth + 1);
  }

  double run(double a, double b) const {
    const double fa = f(a);
    const double fb = f(b);
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return refine(a, fa, m, fm, b, fb, whole, 0);
  }
};

}  // namespace

double quadrature(const std::function<double(double)>& f, double a, double b,
                  double tol) {
  if (!(a < b)) throw DomainError("quadrature needs a < b");
  if (!(tol > 0.0)) throw DomainError("quadrature tolerance must be positive");
  const double length = b - a;
  // coarse pass fixes the scale of the relative part of the target
  const double scale = Simpson{f, 1e-3 / length}.run(a, b);
  return Simpson{f, tol * (1.0 + std::fabs(scale)) / length}.run(a, b);
}

void AbelAccumulator::absorb(const SumState& state_before,
                             const WeightedPrimeTerm& term) {
  const double h = eval_h(static_cast<double>(term.prime));
  if (state_before.n() > 0) integral_.add(state_before.M() * (h - last_h_));
  last_h_ = h;
}

AbelDecomposition AbelAccumulator::decompose(const SumState& state,
                                             double x) const {
  if (!(x >= 2.0)) throw DomainError("Abel decomposition needs x >= 2");
  if (x < static_cast<double>(state.last_prime())) {
    throw SequencingError("Abel decomposition at x below the last absorbed prime");
  }
  AbelDecomposition d;
  d.x = x;
  d.direct_S = state.S();
  const double h_x = eval_h(x);
  d.boundary_term = h_x * state.M();
  NeumaierSum integral = integral_;
  if (state.n() > 0) integral.add(state.M() * (h_x - last_h_));
  d.integral_term = integral.value();
  d.residual = std::fabs(d.direct_S - (d.boundary_term - d.integral_term)) /
               d.direct_S;
  return d;
}

AbelAccumulator AbelAccumulator::restore(NeumaierSum integral, double last_h) {
  AbelAccumulator acc;
  acc.integral_ = integral;
  acc.last_h_ = last_h;
  return acc;
}

AbelDecomposition abel_decompose(double x, std::span<const std::uint64_t> primes) {
  if (!(x >= 2.0)) throw DomainError("Abel decomposition needs x >= 2");
  SumState state;
  AbelAccumulator acc;
  for (std::uint64_t p : primes) {
    const auto term = make_term(state.n() + 1, p);
    acc.absorb(state, term);
    state.push(term);
  }
  return acc.decompose(state, x);
}

namespace {

// Above this x the integrals switch to u = sqrt(log t), where
// dt / sqrt(t log t) = 2 exp(u^2 / 2) du and
// log t h'(t) dt = (u^2 - 1) exp(u^2 / 2) du.
constexpr double kSubstitutionThreshold = 1e8;

struct MainTermIntegrals {
  double log_h_prime = 0.0;  // \int_2^x log t h'(t) dt
  double inv_root = 0.0;     // \int_2^x dt / sqrt(t log t)
};

MainTermIntegrals main_term_integrals(double x, double tol) {
  if (x == 2.0) return {};
  if (x > kSubstitutionThreshold) {
    const double u0 = std::sqrt(std::numbers::ln2);
    const double u1 = std::sqrt(std::log(x));
    return {
        quadrature([](double u) { return (u * u - 1.0) * std::exp(0.5 * u * u); },
                   u0, u1, tol),
        quadrature([](double u) { return 2.0 * std::exp(0.5 * u * u); }, u0, u1, tol),
    };
  }
  return {
      quadrature([](double t) { return std::log(t) * eval_h_prime(t); }, 2.0, x, tol),
      quadrature([](double t) { return 1.0 / std::sqrt(t * std::log(t)); }, 2.0, x, tol),
  };
}

}  // namespace

VerificationRecord main_term_identity(double x, double tol) {
  if (!(x >= 2.0)) throw DomainError("main-term identity needs x >= 2");
  if (!(tol >= 1e-12)) throw DomainError("quadrature tolerance below 1e-12");
  const auto ints = main_term_integrals(x, tol);
  const double lhs = eval_h(x) * std::log(x) - ints.log_h_prime;
  const double rhs = eval_h(2.0) * std::numbers::ln2 + ints.inv_root;
  return make_equality_record("main_term_identity", x, lhs, rhs, 10.0 * tol);
}

double main_term_growth(double x, double tol) {
  if (!(x >= 2.0)) throw DomainError("main-term growth needs x >= 2");
  if (x == 2.0) return 0.0;
  return main_term_integrals(x, tol).inv_root / std::sqrt(x / std::log(x));
}

}  // namespace primesum
