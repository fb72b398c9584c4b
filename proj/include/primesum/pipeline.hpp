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
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "primesum/accumulate.hpp"
#include "primesum/asymptotics.hpp"
#include "primesum/calculus.hpp"
#include "primesum/sieve.hpp"

namespace primesum {

inline constexpr const char* kLibraryVersion = "0.1.0";

struct RunConfig {
  std::uint64_t x_max = 0;
  double grid_start = 100.0;
  double grid_ratio = 1.189207115002721;  // 2^(1/4)
  std::uint64_t segment_size = kDefaultSegmentSize;
  double A = 8.0;
  std::vector<double> lambdas{2.0, 4.0, 8.0};
  std::map<std::string, double> tolerances;  // check_id -> tolerance override
  std::filesystem::path out_dir = ".";
  std::optional<std::filesystem::path> resume_from;
  unsigned threads = 1;

  /// Throws ConfigError describing the first violated constraint.
  void validate() const;

  /// Tolerance for check_id: the override if present, else `fallback`.
  double tolerance(const std::string& check_id, double fallback) const;
};

/// Minimum segment size accepted from the command line.
inline constexpr std::uint64_t kMinCliSegmentSize = 1024;

/// 64-bit FNV-1a hash of the fields that shape accumulation (the grid).
/// x_max is excluded so a finished run can be extended.
std::uint64_t config_hash(const RunConfig& cfg);

/// One recorded point of the stream.
struct RecordedPoint {
  Checkpoint cp;
  AbelDecomposition abel;
  bool on_grid = false;  // false for support points below grid_start
};

/// Everything needed to continue a stream bit-identically.
struct StreamState {
  SumState sums;
  AbelAccumulator abel;
  AnSnTracker an_sn;
  double x_done = 0.0;  // last recorded point; 0 before any

  friend bool operator==(const StreamState&, const StreamState&) = default;
};

struct RunData {
  std::uint64_t x_max = 0;
  std::vector<RecordedPoint> points;  // ascending in x
  StreamState state;

  std::vector<Checkpoint> grid_checkpoints() const;
  std::vector<Checkpoint> all_checkpoints() const;
};

/// Points recorded by a run: the geometric lattice grid_start * ratio^k for
/// every k with value in [3, x_max), then x_max. Points below grid_start are
/// support points; they let block checks snap x / lambda downward.
std::vector<double> recording_points(const RunConfig& cfg);

/// Sieves and accumulates up to cfg.x_max. When `resumed` is given the
/// stream continues from its state; rows not on this config's recording
/// points (a previous run's clipped endpoint) are dropped.
RunData run_compute(const RunConfig& cfg, std::optional<RunData> resumed = std::nullopt);

}  // namespace primesum
