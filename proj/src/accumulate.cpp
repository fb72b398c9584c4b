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

#include "primesum/accumulate.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "primesum/asymptotics.hpp"
#include "primesum/error.hpp"

namespace primesum {

WeightedPrimeTerm make_term(std::uint64_t index, std::uint64_t prime) {
  if (prime < 2) {
    throw DomainError("weight undefined for p = " + std::to_string(prime));
  }
  if (index == 0) throw DomainError("term index is 1-based");
  const auto p = static_cast<double>(prime);
  const double sq = std::log(p) / p;
  return {index, prime, std::sqrt(sq), sq};
}

void SumState::push(const WeightedPrimeTerm& term) {
  if (term.index != n_ + 1) {
    throw SequencingError("expected term index " + std::to_string(n_ + 1) +
                          ", got " + std::to_string(term.index));
  }
  if (term.prime <= last_prime_) {
    throw SequencingError("prime " + std::to_string(term.prime) +
                          " does not follow " + std::to_string(last_prime_));
  }
  e_.add(2.0 * term.weight * s_.value());
  s_.add(term.weight);
  m_.add(term.weight_sq);
  n_ = term.index;
  last_prime_ = term.prime;
}

void SumState::push_prime(std::uint64_t prime) { push(make_term(n_ + 1, prime)); }

double SumState::E() const {
  const double s = S();
  return s * s - M();
}

DoubleDouble SumState::E_extended() const {
  return square(to_double_double(s_)) - to_double_double(m_);
}

SumState SumState::restore(std::uint64_t n, std::uint64_t last_prime,
                           NeumaierSum s, NeumaierSum m, NeumaierSum e) {
  SumState st;
  st.n_ = n;
  st.last_prime_ = last_prime;
  st.s_ = s;
  st.m_ = m;
  st.e_ = e;
  return st;
}

Checkpoint snapshot(const SumState& state, double x,
                    std::optional<std::uint64_t> next_prime) {
  if (!(x >= static_cast<double>(state.last_prime()))) {
    throw SequencingError("snapshot at x = " + std::to_string(x) +
                          " precedes absorbed prime " +
                          std::to_string(state.last_prime()));
  }
  if (next_prime && x >= static_cast<double>(*next_prime)) {
    throw SequencingError("snapshot at x = " + std::to_string(x) +
                          " would miss unabsorbed prime " +
                          std::to_string(*next_prime));
  }
  Checkpoint cp;
  cp.x = x;
  cp.pi = state.n();
  cp.S = state.S();
  cp.M = state.M();
  cp.E = cp.S * cp.S - cp.M;
  if (x >= 3.0) return compute_ratios(cp);
  constexpr double nan = std::numeric_limits<double>::quiet_NaN();
  cp.r_S = cp.r_E_pi = cp.r_E_x = cp.mertens_remainder = nan;
  return cp;
}

double lattice_point(double x_start, double ratio, int k) {
  return x_start * std::pow(ratio, k);
}

std::vector<double> grid_points(double x_start, double x_max, double ratio) {
  if (!(ratio > 1.0)) throw ConfigError("grid ratio must exceed 1");
  if (!(x_start >= 3.0)) throw ConfigError("grid start must be at least 3");
  if (!(x_max >= x_start)) throw ConfigError("x_max must be >= grid start");
  // points within this relative distance of x_max collapse onto x_max
  constexpr double kSnap = 1e-12;
  std::vector<double> pts;
  for (int k = 0;; ++k) {
    const double x = lattice_point(x_start, ratio, k);
    if (x >= x_max * (1.0 - kSnap)) break;
    pts.push_back(x);
  }
  pts.push_back(x_max);
  return pts;
}

}  // namespace primesum
