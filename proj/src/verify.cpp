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

#include "primesum/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "primesum/double_double.hpp"
#include "primesum/error.hpp"
#include "primesum/neumaier.hpp"
#include "primesum/sieve.hpp"

namespace primesum {

VerificationRecord make_equality_record(std::string check_id, double location,
                                        double lhs, double rhs,
                                        double tolerance) {
  VerificationRecord r;
  r.check_id = std::move(check_id);
  r.location = location;
  r.lhs = lhs;
  r.rhs = rhs;
  r.residual = std::fabs(lhs - rhs) / std::max(1.0, std::fabs(rhs));
  r.tolerance = tolerance;
  r.pass = r.residual <= tolerance;
  r.kind = VerificationRecord::Kind::kEquality;
  return r;
}

VerificationRecord make_lower_bound_record(std::string check_id,
                                           double location, double lhs,
                                           double rhs, double tolerance) {
  VerificationRecord r;
  r.check_id = std::move(check_id);
  r.location = location;
  r.lhs = lhs;
  r.rhs = rhs;
  r.residual = std::max(0.0, rhs - lhs) / std::max(1.0, std::fabs(lhs));
  r.tolerance = tolerance;
  r.pass = r.residual <= tolerance;
  r.kind = VerificationRecord::Kind::kLowerBound;
  return r;
}

VerificationRecord make_relative_record(std::string check_id, double location,
                                        double lhs, double rhs, double tolerance) {
  VerificationRecord r;
  r.check_id = std::move(check_id);
  r.location = location;
  r.lhs = lhs;
  r.rhs = rhs;
  r.residual = lhs == rhs ? 0.0 : std::fabs(lhs - rhs) / std::fabs(rhs);
  r.tolerance = tolerance;
  r.pass = r.residual <= tolerance;
  r.kind = VerificationRecord::Kind::kRelative;
  return r;
}

VerificationRecord make_count_record(std::string check_id, double location,
                                     std::uint64_t violations) {
  return make_equality_record(std::move(check_id), location,
                              static_cast<double>(violations), 0.0, 0.0);
}

double pair_sum_bruteforce(std::span<const WeightedPrimeTerm> terms) {
  if (terms.size() > kMaxPairTerms) {
    throw SizeError("pair sum brute force limited to " +
                    std::to_string(kMaxPairTerms) + " terms, got " +
                    std::to_string(terms.size()));
  }
  NeumaierSum total;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    for (std::size_t j = i + 1; j < terms.size(); ++j) {
      total.add(terms[i].weight * terms[j].weight);
    }
  }
  return 2.0 * total.value();
}

std::vector<WeightedPrimeTerm> first_terms(std::size_t n) {
  std::vector<WeightedPrimeTerm> terms;
  if (n == 0) return terms;
  // p_n < n (log n + log log n) for n >= 6
  std::uint64_t bound = 15;
  if (n >= 6) {
    const double dn = static_cast<double>(n);
    bound = static_cast<std::uint64_t>(dn * (std::log(dn) + std::log(std::log(dn)))) + 1;
  }
  const auto primes = base_primes(bound);
  terms.reserve(n);
  for (std::size_t i = 0; i < n; ++i) terms.push_back(make_term(i + 1, primes[i]));
  return terms;
}

VerificationRecord check_weight_monotone(double x_max, unsigned threads) {
  std::uint64_t violations = 0;
  double first_bad = 0.0;
  if (x_max >= 3) {
    SieveConfig cfg;
    cfg.limit = static_cast<std::uint64_t>(std::floor(x_max));
    cfg.start = 2;
    cfg.threads = threads;
    double prev = std::numeric_limits<double>::infinity();
    std::uint64_t index = 1;
    for_each_prime(cfg, [&](std::uint64_t p) {
      const double w = make_term(++index, p).weight;
      if (!(w < prev)) {
        if (violations++ == 0) first_bad = static_cast<double>(p);
      }
      prev = w;
    });
  }
  auto rec = make_count_record("weight_monotone", first_bad, violations);
  if (violations > 0) rec.axis = VerificationRecord::Axis::kX;
  return rec;
}

std::vector<std::size_t> log_subsample(std::size_t n_max) {
  std::vector<std::size_t> ns;
  for (std::size_t n = 1; n < n_max; n *= 2) ns.push_back(n);
  if (n_max >= 1) ns.push_back(n_max);
  return ns;
}

std::vector<VerificationRecord> check_pair_identity(
    std::size_t n_max, std::optional<WeightPerturbation> fault,
    double tolerance) {
  if (n_max > kMaxPairTerms) {
    throw SizeError("pair identity check limited to n <= " +
                    std::to_string(kMaxPairTerms));
  }
  const auto terms = first_terms(n_max);
  std::vector<VerificationRecord> records;
  SumState state;
  std::size_t absorbed = 0;
  for (std::size_t n : log_subsample(n_max)) {
    for (; absorbed < n; ++absorbed) {
      WeightedPrimeTerm t = terms[absorbed];
      if (fault && fault->index == t.index) t.weight += fault->delta;
      state.push(t);
    }
    const double oracle =
        pair_sum_bruteforce(std::span(terms).first(n));
    records.push_back(make_equality_record("pair_identity",
                                           static_cast<double>(n), state.E(),
                                           oracle, tolerance));
    records.back().axis = VerificationRecord::Axis::kIndex;
  }
  return records;
}

VerificationRecord check_jump_identity(double x_max,
                                       std::optional<WeightPerturbation> fault,
                                       double tolerance, unsigned threads) {
  if (x_max > kMaxJumpCheckX) {
    throw DomainError("jump identity check limited to x <= 1e8");
  }
  VerificationRecord worst = make_equality_record("jump_identity", 0, 0, 0, tolerance);
  worst.axis = VerificationRecord::Axis::kIndex;
  if (x_max < 2) return worst;

  SieveConfig cfg;
  cfg.limit = static_cast<std::uint64_t>(std::floor(x_max));
  cfg.threads = threads;
  SumState state;
  for_each_prime(cfg, [&](std::uint64_t p) {
    const WeightedPrimeTerm term = make_term(state.n() + 1, p);
    WeightedPrimeTerm fed = term;
    if (fault && fault->index == term.index) fed.weight += fault->delta;
    // E in double-double: differencing two rounded E values of size ~x/log x
    // would put an ulp-sized floor under the residual
    const DoubleDouble e_before = state.E_extended();
    const double s_before = state.S();
    state.push(fed);
    const double jump = (state.E_extended() - e_before).value();
    const double predicted = 2.0 * term.weight * s_before;
    auto rec = make_equality_record("jump_identity",
                                    static_cast<double>(term.index), jump,
                                    predicted, tolerance);
    rec.axis = VerificationRecord::Axis::kIndex;
    if (rec.residual > worst.residual || worst.location == 0) worst = rec;
  });
  return worst;
}

VerificationRecord check_E_monotone(std::span<const Checkpoint> checkpoints) {
  // lhs = largest violation seen (a drop in E, or a negative E)
  double worst = 0.0;
  double where = checkpoints.empty() ? 0.0 : checkpoints.front().x;
  for (std::size_t i = 0; i < checkpoints.size(); ++i) {
    const auto& cp = checkpoints[i];
    double violation = std::max(0.0, -cp.E);
    if (i > 0) violation = std::max(violation, checkpoints[i - 1].E - cp.E);
    if (violation > worst) {
      worst = violation;
      where = cp.x;
    }
  }
  auto rec = make_equality_record("E_monotone", where, worst, 0.0, 0.0);
  rec.axis = VerificationRecord::Axis::kX;
  return rec;
}

}  // namespace primesum
