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

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "primesum/checkpoint_io.hpp"
#include "primesum/pipeline.hpp"
#include "primesum/verify.hpp"

namespace primesum {

// Default tolerances per check_id; RunConfig::tolerances overrides them.
inline constexpr double kAbelTolerance = 1e-8;
inline constexpr double kMainTermTolerance = 1e-8;  // record tolerance; quadrature runs at 1/10
inline constexpr double kDerivativeTolerance = 1e-6;
inline constexpr std::size_t kPairCheckTerms = 5000;

/// Weight-function checks: central differences at t in {3, 10, 1e3, 1e6}
/// with step t * 1e-5, exact zeros at t = e, and the sign pattern of w' and
/// h' on a 100-point log grid over (1, 1e9].
std::vector<VerificationRecord> derivative_checks(const RunConfig& cfg);

/// Checks computable from recorded points alone: E monotone, Abel residual
/// at every point, the lower bound with cfg.A and the sandwich for every
/// cfg.lambdas at each grid point, ratio positivity, Mertens contraction.
std::vector<VerificationRecord> table_checks(const RunConfig& cfg, const RunData& data);

/// Full suite: table_checks, the streamed identities (pair identity to
/// n = 5000, jump identity and weight monotonicity to min(x_max, 1e8)), the
/// main-term identity at x in {1e3, 1e6} (those <= x_max) and x_max, and
/// derivative_checks. Independent checks run concurrently when
/// cfg.threads > 1; record order is fixed regardless.
std::vector<VerificationRecord> run_verification(const RunConfig& cfg, const RunData& data);

bool all_pass(std::span<const VerificationRecord> records);

/// check_id,axis,location,lhs,rhs,residual,tolerance,pass
void write_verification_csv(std::ostream& out, std::span<const VerificationRecord> records);

struct RunMetadata {
  std::string library_version = kLibraryVersion;
  std::string created;
  double wall_time_s = 0.0;
  std::uint64_t prime_count = 0;
  std::uint64_t last_prime = 0;
};

/// A full report derived from one checkpoint file.
struct ReportBundle {
  RunConfig config;
  std::vector<RecordedPoint> points;
  std::vector<VerificationRecord> records;
  std::vector<RatioBand> bands;
  std::vector<BlockStat> blocks;
  std::vector<AnSnSample> an_sn;
  std::vector<std::pair<double, double>> main_term_growth;  // (x, ratio) per grid point
  RunMetadata metadata;
};

/// Builds the bundle; cfg supplies A, lambdas and tolerances, the file
/// supplies the grid and every recorded value.
ReportBundle build_report(const RunConfig& cfg, const CheckpointFile& file);

nlohmann::json to_json(const ReportBundle& bundle);

/// Writes report.json and the per-series CSVs (series_<name>.csv with
/// columns x,value; an_sn.csv; blocks.csv; abel.csv) into out_dir.
void write_report(const std::filesystem::path& out_dir, const ReportBundle& bundle);

}  // namespace primesum
