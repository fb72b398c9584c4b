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

#include "primesum/pipeline.hpp"

#include <cmath>

#include <fmt/format.h>

#include "primesum/error.hpp"

namespace primesum {

void RunConfig::validate() const {
  if (!(grid_start >= 3.0)) {
    throw ConfigError(fmt::format("--grid-start must be >= 3 (got {})", grid_start));
  }
  if (!(static_cast<double>(x_max) >= grid_start)) {
    throw ConfigError(
        fmt::format("--x-max ({}) must be >= --grid-start ({})", x_max, grid_start));
  }
  if (x_max > kMaxSieveLimit) throw ConfigError("--x-max exceeds 2^63 - 1");
  if (!(grid_ratio > 1.0)) {
    throw ConfigError(fmt::format("--grid-ratio must exceed 1 (got {})", grid_ratio));
  }
  if (!(A > 1.0)) throw ConfigError(fmt::format("--A must exceed 1 (got {})", A));
  for (double l : lambdas) {
    if (!(l > 1.0)) throw ConfigError(fmt::format("--lambda must exceed 1 (got {})", l));
  }
  if (segment_size < kMinCliSegmentSize) {
    throw ConfigError(fmt::format("--segment-size must be >= {} (got {})",
                                  kMinCliSegmentSize, segment_size));
  }
  if (threads == 0) throw ConfigError("--threads must be positive");
  for (const auto& [id, tol] : tolerances) {
    if (!(tol >= 0.0)) {
      throw ConfigError(fmt::format("--tol {}={} must be non-negative", id, tol));
    }
  }
}

double RunConfig::tolerance(const std::string& check_id, double fallback) const {
  auto it = tolerances.find(check_id);
  return it == tolerances.end() ? fallback : it->second;
}

std::uint64_t config_hash(const RunConfig& cfg) {
  const std::string canon = fmt::format("primesum-grid;start={:.17g};ratio={:.17g}",
                                        cfg.grid_start, cfg.grid_ratio);
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : canon) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::vector<Checkpoint> RunData::grid_checkpoints() const {
  std::vector<Checkpoint> out;
  for (const auto& p : points) {
    if (p.on_grid) out.push_back(p.cp);
  }
  return out;
}

std::vector<Checkpoint> RunData::all_checkpoints() const {
  std::vector<Checkpoint> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(p.cp);
  return out;
}

std::vector<double> recording_points(const RunConfig& cfg) {
  std::vector<double> pts;
  const auto x_max = static_cast<double>(cfg.x_max);
  int k = 0;
  while (lattice_point(cfg.grid_start, cfg.grid_ratio, k - 1) >= 3.0) --k;
  for (; k < 0; ++k) pts.push_back(lattice_point(cfg.grid_start, cfg.grid_ratio, k));
  const auto grid = grid_points(cfg.grid_start, x_max, cfg.grid_ratio);
  pts.insert(pts.end(), grid.begin(), grid.end());
  return pts;
}

namespace {

bool same_point(double a, double b) {
  return std::fabs(a - b) <= SumTable::kSnap * std::max(a, b);
}

}  // namespace

RunData run_compute(const RunConfig& cfg, std::optional<RunData> resumed) {
  cfg.validate();
  const auto plan = recording_points(cfg);

  RunData data;
  data.x_max = cfg.x_max;
  std::size_t next = 0;
  if (resumed) {
    if (static_cast<double>(cfg.x_max) <= resumed->state.x_done) {
      // the earlier run already covers x_max
      return *std::move(resumed);
    }
    data.state = resumed->state;
    // keep the rows on this plan; anything else is an endpoint clipped to
    // the earlier x_max
    const auto& rows = resumed->points;
    std::size_t r = 0;
    for (; next < plan.size(); ++next) {
      const double x = plan[next];
      if (x > data.state.x_done && !same_point(x, data.state.x_done)) break;
      while (r < rows.size() && rows[r].cp.x < x && !same_point(rows[r].cp.x, x)) ++r;
      if (r == rows.size() || !same_point(rows[r].cp.x, x)) {
        throw FormatError(fmt::format(
            "checkpoint file lacks the point x = {:.17g} required by this grid", x));
      }
      data.points.push_back(rows[r++]);
    }
  }

  auto record = [&](double x, std::optional<std::uint64_t> next_prime) {
    RecordedPoint rp;
    rp.cp = snapshot(data.state.sums, x, next_prime);
    rp.abel = data.state.abel.decompose(data.state.sums, x);
    rp.on_grid = x >= cfg.grid_start * (1.0 - SumTable::kSnap);
    data.points.push_back(rp);
    data.state.x_done = x;
  };

  SieveConfig sc;
  sc.limit = cfg.x_max;
  sc.segment_size = cfg.segment_size;
  sc.threads = cfg.threads;
  sc.start = resumed ? static_cast<std::uint64_t>(std::floor(data.state.x_done)) : 1;

  if (sc.start < sc.limit) {
    for_each_prime(sc, [&](std::uint64_t p) {
      const auto pd = static_cast<double>(p);
      while (next < plan.size() && plan[next] < pd) record(plan[next++], p);
      auto& st = data.state;
      const auto term = make_term(st.sums.n() + 1, p);
      st.an_sn.observe(term, st.sums.S());
      st.abel.absorb(st.sums, term);
      st.sums.push(term);
    });
  }
  while (next < plan.size()) record(plan[next++], std::nullopt);
  return data;
}

}  // namespace primesum
