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

#include "primesum/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "primesum/calculus.hpp"
#include "primesum/error.hpp"
#include "primesum/sieve.hpp"

namespace primesum {

Checkpoint compute_ratios(Checkpoint cp) {
  if (!(cp.x >= 3.0)) {
    throw DomainError("ratios need x >= 3, got " + std::to_string(cp.x));
  }
  const double log_x = std::log(cp.x);
  const double scale = cp.x / log_x;
  cp.r_S = cp.S / std::sqrt(scale);
  cp.r_E_pi = cp.E / static_cast<double>(cp.pi);
  cp.r_E_x = cp.E / scale;
  cp.mertens_remainder = cp.M - log_x;
  return cp;
}

SumTable::SumTable(std::vector<Checkpoint> checkpoints)
    : cps_(std::move(checkpoints)) {
  std::stable_sort(cps_.begin(), cps_.end(),
                   [](const Checkpoint& a, const Checkpoint& b) { return a.x < b.x; });
}

SumTable SumTable::from_points(std::vector<double> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  std::vector<Checkpoint> cps;
  if (points.empty()) return SumTable{};
  if (points.front() < 2.0) throw DomainError("sum table points must be >= 2");

  SumState state;
  std::size_t next = 0;
  auto flush_below = [&](std::optional<std::uint64_t> p) {
    while (next < points.size() &&
           (!p || points[next] < static_cast<double>(*p))) {
      cps.push_back(snapshot(state, points[next], p));
      ++next;
    }
  };
  SieveConfig cfg;
  cfg.limit = static_cast<std::uint64_t>(std::floor(points.back()));
  for_each_prime(cfg, [&](std::uint64_t p) {
    flush_below(p);
    state.push_prime(p);
  });
  flush_below(std::nullopt);
  return SumTable(std::move(cps));
}

const Checkpoint& SumTable::at(double x) const {
  const Checkpoint& cp = at_or_below(x);
  if (std::fabs(cp.x - x) > kSnap * x) {
    throw DomainError("no checkpoint recorded at x = " + std::to_string(x));
  }
  return cp;
}

const Checkpoint& SumTable::at_or_below(double x) const {
  const double key = x * (1.0 + kSnap);
  auto it = std::upper_bound(
      cps_.begin(), cps_.end(), key,
      [](double v, const Checkpoint& cp) { return v < cp.x; });
  if (it == cps_.begin()) {
    throw DomainError("no checkpoint at or below x = " + std::to_string(x));
  }
  return *std::prev(it);
}

namespace {

const Checkpoint& block_floor(double x, double ratio, const SumTable& table,
                              const char* what) {
  if (!(ratio > 1.0)) {
    throw DomainError(std::string(what) + " must exceed 1");
  }
  if (!(x / ratio >= 3.0)) {
    throw DomainError("block start x/" + std::string(what) + " = " +
                      std::to_string(x / ratio) + " is below 3");
  }
  const Checkpoint& lo = table.at_or_below(x / ratio);
  if (!(lo.x >= 3.0)) {
    throw DomainError("no checkpoint in [3, x/" + std::string(what) + "]");
  }
  return lo;
}

}  // namespace

BlockStat block_sandwich(double x, double lambda, const SumTable& table) {
  const Checkpoint& hi = table.at(x);
  const Checkpoint& lo = block_floor(x, lambda, table, "lambda");
  BlockStat b;
  b.x = hi.x;
  b.x_lo = lo.x;
  b.lambda = lambda;
  b.delta_S = hi.S - lo.S;
  b.delta_pi = hi.pi - lo.pi;
  const auto count = static_cast<double>(b.delta_pi);
  b.lower = count * eval_w(hi.x);
  b.upper = count * eval_w(lo.x);
  return b;
}

std::vector<VerificationRecord> sandwich_records(const BlockStat& b,
                                                 double slack) {
  std::vector<VerificationRecord> out{
      make_lower_bound_record("block_sandwich_lower", b.x, b.delta_S, b.lower, slack),
      make_lower_bound_record("block_sandwich_upper", b.x, b.upper, b.delta_S, slack),
  };
  for (auto& r : out) r.axis = VerificationRecord::Axis::kX;
  return out;
}

VerificationRecord lower_bound_check(double x, double A, const SumTable& table,
                                     double slack) {
  const Checkpoint& hi = table.at(x);
  const Checkpoint& lo = block_floor(x, A, table, "A");
  const double bound = (hi.M - lo.M) / eval_w(lo.x);
  auto rec = make_lower_bound_record("lower_bound_A", hi.x, hi.S, bound, slack);
  rec.axis = VerificationRecord::Axis::kX;
  return rec;
}

void AnSnTracker::observe(const WeightedPrimeTerm& term, double S_before) {
  const AnSnSample s{term.index, term.prime, term.weight * S_before};
  if ((term.index & (term.index - 1)) == 0) samples_.push_back(s);
  if (term.index >= 2) {
    if (s.value < min_.value) min_ = s;
    if (s.value > max_.value) max_ = s;
  }
  last_ = s;
}

std::vector<AnSnSample> AnSnTracker::samples() const {
  auto out = samples_;
  if (last_.n != 0 && (out.empty() || out.back().n != last_.n)) out.push_back(last_);
  return out;
}

AnSnTracker AnSnTracker::restore(std::vector<AnSnSample> samples,
                                 AnSnSample min, AnSnSample max,
                                 AnSnSample last) {
  AnSnTracker t;
  t.samples_ = std::move(samples);
  t.min_ = min;
  t.max_ = max;
  t.last_ = last;
  return t;
}

AnSnSeries an_Sn_series(double x_max, unsigned threads) {
  if (!(x_max >= 3.0)) throw DomainError("a_n S_{n-1} series needs x_max >= 3");
  SieveConfig cfg;
  cfg.limit = static_cast<std::uint64_t>(std::floor(x_max));
  cfg.threads = threads;
  SumState state;
  AnSnTracker tracker;
  for_each_prime(cfg, [&](std::uint64_t p) {
    const auto term = make_term(state.n() + 1, p);
    tracker.observe(term, state.S());
    state.push(term);
  });
  return {tracker.samples(), tracker.min(), tracker.max()};
}

namespace {

struct BandBuilder {
  RatioBand band;
  bool empty = true;

  void observe(double x, double v) {
    if (empty) {
      band.x_min = band.x_max = x;
      band.inf_value = band.sup_value = v;
      band.inf_at = band.sup_at = x;
      empty = false;
      return;
    }
    band.x_min = std::min(band.x_min, x);
    band.x_max = std::max(band.x_max, x);
    if (v < band.inf_value) {
      band.inf_value = v;
      band.inf_at = x;
    }
    if (v > band.sup_value) {
      band.sup_value = v;
      band.sup_at = x;
    }
  }
};

}  // namespace

std::vector<RatioBand> empirical_constants(
    std::span<const Checkpoint> checkpoints, double x_min, double x_max) {
  std::vector<BandBuilder> b(4);
  b[0].band.name = "r_S";
  b[1].band.name = "r_E_pi";
  b[2].band.name = "r_E_x";
  b[3].band.name = "mertens_remainder";
  for (const auto& cp : checkpoints) {
    if (cp.x < x_min || cp.x > x_max) continue;
    b[0].observe(cp.x, cp.r_S);
    b[1].observe(cp.x, cp.r_E_pi);
    b[2].observe(cp.x, cp.r_E_x);
    b[3].observe(cp.x, cp.mertens_remainder);
  }
  if (b[0].empty) {
    throw ConfigError("no checkpoint with x in [" + std::to_string(x_min) +
                      ", " + std::to_string(x_max) + "]");
  }
  std::vector<RatioBand> out;
  for (auto& bb : b) out.push_back(bb.band);
  return out;
}

VerificationRecord check_ratios_positive(std::span<const Checkpoint> checkpoints,
                                         std::span<const AnSnSample> an_sn,
                                         double x_min) {
  std::uint64_t violations = 0;
  double first_bad = 0.0;
  auto flag = [&](double where) {
    if (violations++ == 0) first_bad = where;
  };
  auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
  for (const auto& cp : checkpoints) {
    if (cp.x < x_min) continue;
    if (!positive(cp.r_S) || !positive(cp.r_E_pi) || !positive(cp.r_E_x) ||
        !std::isfinite(cp.mertens_remainder)) {
      flag(cp.x);
    }
  }
  for (const auto& s : an_sn) {
    if (s.n >= 2 && !positive(s.value)) flag(static_cast<double>(s.prime));
  }
  auto rec = make_count_record("ratio_positive", first_bad, violations);
  rec.axis = VerificationRecord::Axis::kX;
  if (violations == 0) rec.axis = VerificationRecord::Axis::kNone;
  return rec;
}

std::optional<VerificationRecord> check_mertens_contraction(
    std::span<const Checkpoint> checkpoints) {
  if (checkpoints.empty() || checkpoints.back().x < kLateWindowHi) return std::nullopt;
  auto spread = [&](double lo, double hi) {
    for (const auto& b : empirical_constants(checkpoints, lo, hi)) {
      if (b.name == "mertens_remainder") return b.width();
    }
    return 0.0;
  };
  const double early = spread(kEarlyWindowLo, kEarlyWindowHi);
  const double late = spread(kLateWindowLo, kLateWindowHi);
  // lhs = early spread, rhs = late spread; the claim is lhs > rhs
  auto rec = make_lower_bound_record("mertens_contraction", 0.0, early, late, 0.0);
  rec.pass = early > late;
  return rec;
}

RatioBand an_Sn_band(std::span<const AnSnSample> samples, double x_min,
                     double x_max) {
  BandBuilder b;
  b.band.name = "anS";
  for (const auto& s : samples) {
    const auto p = static_cast<double>(s.prime);
    if (p < x_min || p > x_max) continue;
    b.observe(p, s.value);
  }
  if (b.empty) throw ConfigError("no a_n S_{n-1} sample in the requested window");
  return b.band;
}

}  // namespace primesum
