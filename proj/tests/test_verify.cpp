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

#include <algorithm>
#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "fixtures/reference_values.hpp"
#include "oracle.hpp"
#include "primesum/error.hpp"
#include "primesum/sieve.hpp"
#include "primesum/verify.hpp"

namespace primesum {
namespace {

namespace fx = fixtures;

TEST(PairSum, SmallCases) {
  EXPECT_EQ(pair_sum_bruteforce({}), 0.0);
  const auto terms = first_terms(4);
  EXPECT_EQ(pair_sum_bruteforce(std::span(terms).first(1)), 0.0);
  EXPECT_NEAR(pair_sum_bruteforce(std::span(terms).first(2)), fx::kTwiceWeight2Weight3, 1e-15);
  EXPECT_NEAR(pair_sum_bruteforce(terms), fx::kE10, 1e-14);
}

TEST(PairSum, SizeLimit) {
  std::vector<WeightedPrimeTerm> many(kMaxPairTerms + 1, make_term(1, 2));
  EXPECT_THROW(pair_sum_bruteforce(many), SizeError);
  EXPECT_THROW(check_pair_identity(kMaxPairTerms + 1), SizeError);
}

TEST(FirstTerms, MatchTrialDivision) {
  const auto terms = first_terms(5000);
  ASSERT_EQ(terms.size(), 5000u);
  EXPECT_EQ(terms.back().prime, fx::kPrime5000);
  const auto ref = oracle::trial_division_primes(fx::kPrime5000);
  for (std::size_t i = 0; i < terms.size(); ++i) {
    ASSERT_EQ(terms[i].prime, ref[i]);
    ASSERT_EQ(terms[i].index, i + 1);
  }
  for (std::size_t n : {1u, 2u, 5u, 6u, 7u}) EXPECT_EQ(first_terms(n).size(), n);
}

TEST(LogSubsample, Shape) {
  EXPECT_EQ(log_subsample(1), (std::vector<std::size_t>{1}));
  EXPECT_EQ(log_subsample(4), (std::vector<std::size_t>{1, 2, 4}));
  EXPECT_EQ(log_subsample(5000).size(), 14u);
  EXPECT_EQ(log_subsample(5000).back(), 5000u);
  EXPECT_EQ(log_subsample(5000)[12], 4096u);
}

TEST(PairIdentity, Examples) {
  const auto recs = check_pair_identity(4);
  ASSERT_EQ(recs.size(), 3u);
  EXPECT_EQ(recs[0].location, 1.0);
  EXPECT_EQ(recs[0].rhs, 0.0);
  EXPECT_LE(std::fabs(recs[0].lhs), 1e-16);
  EXPECT_TRUE(recs[0].pass);
  EXPECT_NEAR(recs[2].lhs, fx::kE10, 1e-14);
  EXPECT_NEAR(recs[2].rhs, fx::kE10, 1e-14);
  EXPECT_TRUE(recs[2].pass);
}

TEST(PairIdentity, UpTo5000) {
  const auto recs = check_pair_identity(5000);
  ASSERT_EQ(recs.size(), 14u);
  for (const auto& r : recs) {
    EXPECT_TRUE(r.pass) << "n=" << r.location << " residual " << r.residual;
    EXPECT_EQ(r.tolerance, 1e-10);
  }
  EXPECT_NEAR(recs.back().rhs / fx::kPairSum5000, 1.0, 1e-12);
}

// A 1e-6 shift in one weight must show at every sampled n >= that index.
TEST(PairIdentity, DetectsPerturbedWeight) {
  for (std::uint64_t index : {1u, 3u, 100u, 2500u, 5000u}) {
    const auto recs = check_pair_identity(5000, WeightPerturbation{index, 1e-6});
    for (const auto& r : recs) {
      if (r.location >= static_cast<double>(index)) {
        EXPECT_FALSE(r.pass) << "index " << index << " n=" << r.location;
      } else {
        EXPECT_TRUE(r.pass) << "index " << index << " n=" << r.location;
      }
    }
  }
}

TEST(JumpIdentity, Examples) {
  const auto r10 = check_jump_identity(10);
  EXPECT_LE(r10.residual, 1e-14);
  EXPECT_TRUE(r10.pass);

  const auto r2 = check_jump_identity(2);
  EXPECT_EQ(r2.location, 1.0);
  EXPECT_EQ(r2.rhs, 0.0);
  EXPECT_LE(r2.residual, 1e-16);
  EXPECT_TRUE(r2.pass);

  const auto r6 = check_jump_identity(1e6, std::nullopt, kJumpTolerance, 2);
  EXPECT_TRUE(r6.pass) << r6.residual;
  EXPECT_LE(r6.location, static_cast<double>(fx::kPi1e6));
}

TEST(JumpIdentity, DetectsPerturbedWeight) {
  const auto r = check_jump_identity(1e6, WeightPerturbation{40'000, 1e-6});
  EXPECT_FALSE(r.pass);
  EXPECT_EQ(r.location, 40'000.0);
}

TEST(JumpIdentity, RefusesBeyondBudget) {
  EXPECT_THROW(check_jump_identity(2e8), DomainError);
}

Checkpoint cp_at(double x, double E) {
  Checkpoint c;
  c.x = x;
  c.E = E;
  return c;
}

TEST(EMonotone, Cases) {
  const std::vector<Checkpoint> one{cp_at(10, 3.9)};
  EXPECT_TRUE(check_E_monotone(one).pass);

  const auto table = [] {
    std::vector<double> xs{10, 100, 1000};
    std::vector<Checkpoint> out;
    SumState st;
    std::size_t k = 0;
    for_each_prime(SieveConfig{1000}, [&](std::uint64_t p) {
      while (k < xs.size() && xs[k] < static_cast<double>(p)) out.push_back(snapshot(st, xs[k++], p));
      st.push_prime(p);
    });
    while (k < xs.size()) out.push_back(snapshot(st, xs[k++]));
    return out;
  }();
  ASSERT_EQ(table.size(), 3u);
  EXPECT_TRUE(check_E_monotone(table).pass);

  auto permuted = table;
  std::swap(permuted[0], permuted[2]);
  const auto bad = check_E_monotone(permuted);
  EXPECT_FALSE(bad.pass);
  EXPECT_GT(bad.lhs, 0.0);

  const std::vector<Checkpoint> negative{cp_at(10, -1e-3)};
  EXPECT_FALSE(check_E_monotone(negative).pass);
}

TEST(Records, PropertyPassIffResidualWithinTolerance) {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> v(-1e3, 1e3);
  std::uniform_real_distribution<double> lt(-14, 0);
  for (int i = 0; i < 5000; ++i) {
    const double lhs = v(rng), rhs = v(rng), tol = std::pow(10.0, lt(rng));
    const auto e = make_equality_record("x", 0, lhs, rhs, tol);
    ASSERT_DOUBLE_EQ(e.residual, std::fabs(lhs - rhs) / std::max(1.0, std::fabs(rhs)));
    ASSERT_EQ(e.pass, e.residual <= tol);
    const auto b = make_lower_bound_record("x", 0, lhs, rhs, tol);
    ASSERT_EQ(b.residual == 0.0, lhs >= rhs);
    ASSERT_EQ(b.pass, b.residual <= tol);
  }
}

TEST(WeightMonotone, HoldsToMillion) {
  const auto r = check_weight_monotone(1e6, 2);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.lhs, 0.0);
}

}  // namespace
}  // namespace primesum
