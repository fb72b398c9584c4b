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

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "fixtures/reference_values.hpp"
#include "primesum/asymptotics.hpp"
#include "primesum/calculus.hpp"
#include "primesum/error.hpp"

namespace primesum {
namespace {

namespace fx = fixtures;

TEST(Ratios, AtTen) {
  const auto table = SumTable::from_points({10.0});
  const auto& cp = table.at(10.0);
  EXPECT_EQ(cp.pi, 4u);
  EXPECT_NEAR(cp.r_S, fx::kRS10, 1e-14);
  EXPECT_NEAR(cp.r_E_pi, fx::kREpi10, 1e-14);
  EXPECT_NEAR(cp.r_E_x, fx::kREx10, 1e-14);
  EXPECT_NEAR(cp.mertens_remainder, fx::kMertens10, 1e-14);
}

TEST(Ratios, RefuseBelowThree) {
  Checkpoint cp;
  cp.x = std::numbers::e;
  cp.pi = 1;
  EXPECT_THROW(compute_ratios(cp), DomainError);
  cp.x = 3.0;
  EXPECT_NO_THROW(compute_ratios(cp));
}

// r_E_pi / r_E_x = x / (pi log x) whenever both are defined.
TEST(Ratios, ScaleConsistency) {
  const auto table = SumTable::from_points({10, 100, 1e3, 1e4, 1e5, 1e6});
  for (const auto& cp : table.checkpoints()) {
    const double expect = cp.x / (static_cast<double>(cp.pi) * std::log(cp.x));
    EXPECT_NEAR(cp.r_E_pi / cp.r_E_x, expect, 1e-13 * expect) << cp.x;
  }
}

TEST(SumTableLookup, ExactAndSnapped) {
  const auto table = SumTable::from_points({10, 20, 80});
  EXPECT_EQ(table.at(20.0).pi, 8u);
  EXPECT_EQ(table.at(20.0 * (1 + 1e-14)).x, 20.0);
  EXPECT_THROW(table.at(30.0), DomainError);
  EXPECT_EQ(table.at_or_below(30.0).x, 20.0);
  EXPECT_THROW(table.at_or_below(9.0), DomainError);
}

TEST(AnSn, FirstValues) {
  AnSnTracker t;
  SumState st;
  for (std::uint64_t p : {2u, 3u, 5u}) {
    const auto term = make_term(st.n() + 1, p);
    t.observe(term, st.S());
    st.push(term);
  }
  const auto s = t.samples();
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s[0].n, 1u);
  EXPECT_EQ(s[0].value, 0.0);
  EXPECT_EQ(s[1].n, 2u);
  EXPECT_NEAR(s[1].value, fx::kTwiceWeight2Weight3 / 2, 1e-15);
  EXPECT_NEAR(s[1].value, 0.3563, 1e-4);
  EXPECT_EQ(s[2].n, 3u);  // last, not a power of two
  EXPECT_EQ(t.min().n, 2u);
}

TEST(AnSn, SeriesPositiveAndSampled) {
  const auto series = an_Sn_series(1e6);
  EXPECT_EQ(series.samples.back().n, fx::kPi1e6);
  for (const auto& s : series.samples) {
    if (s.n >= 2) EXPECT_GT(s.value, 0.0);
  }
  EXPECT_LE(series.min.value, series.max.value);
  EXPECT_THROW(an_Sn_series(2.5), DomainError);
}

TEST(LowerBound, AtEighty) {
  const auto table = SumTable::from_points({10, 80});
  const auto rec = lower_bound_check(80.0, 8.0, table);
  EXPECT_TRUE(rec.pass);
  const auto& hi = table.at(80), &lo = table.at(10);
  EXPECT_NEAR(rec.rhs, (hi.M - lo.M) / eval_w(10.0), 1e-15);
  EXPECT_EQ(rec.lhs, hi.S);
  EXPECT_GE(rec.lhs, rec.rhs);
}

TEST(LowerBound, RefusesShortRange) {
  const auto table = SumTable::from_points({10, 20});
  EXPECT_THROW(lower_bound_check(20.0, 8.0, table), DomainError);
}

TEST(Sandwich, AtTwenty) {
  const auto table = SumTable::from_points({10, 20});
  const auto b = block_sandwich(20.0, 2.0, table);
  EXPECT_EQ(b.x_lo, 10.0);
  EXPECT_EQ(b.delta_pi, 4u);
  EXPECT_LE(b.lower, b.delta_S);
  EXPECT_LE(b.delta_S, b.upper);
  for (const auto& r : sandwich_records(b)) EXPECT_TRUE(r.pass) << r.check_id;
}

TEST(Sandwich, EmptyBlock) {
  const auto table = SumTable::from_points({24, 28});
  const auto b = block_sandwich(28.0, 28.0 / 24.0, table);
  EXPECT_EQ(b.delta_pi, 0u);
  EXPECT_EQ(b.delta_S, 0.0);
  for (const auto& r : sandwich_records(b)) EXPECT_TRUE(r.pass);
}

TEST(Sandwich, HoldsOnLattice) {
  std::vector<double> pts;
  for (int k = 0; k <= 80; ++k) pts.push_back(3.0 * std::pow(1.189207115002721, k));
  const auto table = SumTable::from_points(pts);
  for (double x : pts) {
    for (double lambda : {2.0, 4.0, 8.0}) {
      if (x / lambda < 3.0) continue;
      for (const auto& r : sandwich_records(block_sandwich(x, lambda, table))) {
        EXPECT_TRUE(r.pass) << r.check_id << " x=" << x << " lambda=" << lambda;
      }
    }
  }
}

TEST(EmpiricalConstants, SinglePointAndWindows) {
  const auto table = SumTable::from_points({10, 100, 1e3, 1e4});
  const auto one = empirical_constants(table.checkpoints(), 100, 100);
  ASSERT_EQ(one.size(), 4u);
  for (const auto& b : one) {
    EXPECT_EQ(b.width(), 0.0);
    EXPECT_EQ(b.inf_at, 100.0);
  }
  EXPECT_EQ(one[0].inf_value, table.at(100).r_S);

  const auto all = empirical_constants(table.checkpoints(), 10);
  for (const auto& b : all) EXPECT_GE(b.width(), 0.0);
  EXPECT_THROW(empirical_constants(table.checkpoints(), 2e4), ConfigError);
}

TEST(RatiosPositive, PassesAndFlags) {
  auto cps = SumTable::from_points({10, 100, 1e3}).checkpoints();
  std::vector<Checkpoint> v(cps.begin(), cps.end());
  EXPECT_TRUE(check_ratios_positive(v, {}).pass);
  v.back().r_S = -1.0;
  const auto bad = check_ratios_positive(v, {});
  EXPECT_FALSE(bad.pass);
  EXPECT_EQ(bad.location, 1e3);
}

TEST(MertensContraction, NeedsLongRun) {
  const auto table = SumTable::from_points({100, 1e3, 1e4});
  EXPECT_FALSE(check_mertens_contraction(table.checkpoints()).has_value());
}

}  // namespace
}  // namespace primesum
