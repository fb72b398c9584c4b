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
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "primesum/accumulate.hpp"
#include "primesum/verify.hpp"

namespace primesum {

/// Fills r_S, r_E_pi, r_E_x and mertens_remainder from x, pi, S, M, E.
/// Throws DomainError for x < 3.
Checkpoint compute_ratios(Checkpoint cp);

/// Checkpoints ordered by x, queried by exact point or by snapping downward.
class SumTable {
 public:
  /// Relative distance under which two x values are the same point.
  static constexpr double kSnap = 1e-12;

  SumTable() = default;
  /// Sorts by x. Checkpoints must come from a single ascending stream.
  explicit SumTable(std::vector<Checkpoint> checkpoints);

  /// Sieves up to max(points) and snapshots every point exactly.
  static SumTable from_points(std::vector<double> points);

  /// The checkpoint at x; throws DomainError if none is recorded.
  const Checkpoint& at(double x) const;
  /// The checkpoint with the largest x' <= x; throws DomainError if none.
  const Checkpoint& at_or_below(double x) const;

  std::span<const Checkpoint> checkpoints() const { return cps_; }

 private:
  std::vector<Checkpoint> cps_;
};

/// S(x) - S(x_lo) on a block (x_lo, x] with its exact monotone sandwich.
/// x_lo is x / lambda snapped down to the nearest recorded point.
struct BlockStat {
  double x = 0.0;
  double x_lo = 0.0;
  double lambda = 0.0;
  double delta_S = 0.0;
  std::uint64_t delta_pi = 0;
  double lower = 0.0;  // delta_pi * w(x)
  double upper = 0.0;  // delta_pi * w(x_lo)
};

inline constexpr double kBoundSlack = 1e-12;

/// Throws DomainError for lambda <= 1 or when x / lambda < 3.
BlockStat block_sandwich(double x, double lambda, const SumTable& table);

/// Lower and upper halves of the sandwich as records.
std::vector<VerificationRecord> sandwich_records(const BlockStat& b,
                                                 double slack = kBoundSlack);

/// S(x) >= (M(x) - M(x_lo)) / w(x_lo) with x_lo = x / A snapped downward.
/// Throws DomainError for A <= 1 or x / A < 3.
VerificationRecord lower_bound_check(double x, double A, const SumTable& table,
                                     double slack = kBoundSlack);

struct AnSnSample {
  std::uint64_t n = 0;
  std::uint64_t prime = 0;
  double value = 0.0;  // a_n * S_{n-1}

  friend bool operator==(const AnSnSample&, const AnSnSample&) = default;
};

/// a_n S_{n-1} along the prime stream: kept at n = 1, 2, 4, ... and tracked
/// for min/max over every n >= 2.
class AnSnTracker {
 public:
  void observe(const WeightedPrimeTerm& term, double S_before);

  /// Samples plus the most recent observation when it is not a power of two.
  std::vector<AnSnSample> samples() const;

  const AnSnSample& min() const { return min_; }
  const AnSnSample& max() const { return max_; }
  const AnSnSample& last() const { return last_; }
  const std::vector<AnSnSample>& stored_samples() const { return samples_; }

  static AnSnTracker restore(std::vector<AnSnSample> samples, AnSnSample min,
                             AnSnSample max, AnSnSample last);

  friend bool operator==(const AnSnTracker&, const AnSnTracker&) = default;

 private:
  std::vector<AnSnSample> samples_;
  AnSnSample min_{0, 0, std::numeric_limits<double>::infinity()};
  AnSnSample max_{0, 0, -std::numeric_limits<double>::infinity()};
  AnSnSample last_;
};

struct AnSnSeries {
  std::vector<AnSnSample> samples;
  AnSnSample min;  // over all n >= 2
  AnSnSample max;
};

/// Streams primes up to x_max. Throws DomainError for x_max < 3.
AnSnSeries an_Sn_series(double x_max, unsigned threads = 1);

/// Empirical inf/sup of one series over a window of x.
struct RatioBand {
  std::string name;
  double x_min = 0.0;
  double x_max = 0.0;
  double inf_value = 0.0;
  double inf_at = 0.0;
  double sup_value = 0.0;
  double sup_at = 0.0;

  double width() const { return sup_value - inf_value; }
};

/// Bands of r_S, r_E_pi, r_E_x and mertens_remainder over checkpoints with
/// x in [x_min, x_max]. Throws ConfigError when the window selects nothing.
std::vector<RatioBand> empirical_constants(
    std::span<const Checkpoint> checkpoints, double x_min,
    double x_max = std::numeric_limits<double>::infinity());

/// r_S, r_E_pi and r_E_x finite and positive, mertens_remainder finite, at
/// every checkpoint with x >= x_min; a_n S_{n-1} positive for n >= 2.
VerificationRecord check_ratios_positive(std::span<const Checkpoint> checkpoints,
                                         std::span<const AnSnSample> an_sn,
                                         double x_min = 100.0);

inline constexpr double kEarlyWindowLo = 1e2;
inline constexpr double kEarlyWindowHi = 1e4;
inline constexpr double kLateWindowLo = 1e6;
inline constexpr double kLateWindowHi = 1e8;

/// Compares the spread of M(x) - log x over [1e6, 1e8] with the spread over
/// [1e2, 1e4]; passes when the late spread is strictly smaller. nullopt when
/// the checkpoints do not reach 1e8.
std::optional<VerificationRecord> check_mertens_contraction(
    std::span<const Checkpoint> checkpoints);

/// Band named "anS" over samples whose prime lies in [x_min, x_max].
RatioBand an_Sn_band(std::span<const AnSnSample> samples, double x_min,
                     double x_max = std::numeric_limits<double>::infinity());

}  // namespace primesum
