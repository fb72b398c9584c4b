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

#include <filesystem>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "primesum/checkpoint_io.hpp"
#include "primesum/error.hpp"
#include "primesum/pipeline.hpp"

namespace primesum {
namespace {

namespace fs = std::filesystem;

std::string csv_of(const RunData& data) {
  std::ostringstream out;
  write_checkpoint_csv(out, data.grid_checkpoints());
  return out.str();
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "primesum_test_pipeline";
  fs::create_directories(dir);
  return dir / name;
}

TEST(Pipeline, GridRowsToTenThousand) {
  RunConfig cfg;
  cfg.x_max = 10'000;
  const auto data = run_compute(cfg);
  const auto grid = data.grid_checkpoints();
  ASSERT_EQ(grid.size(), 28u);
  EXPECT_EQ(grid.front().x, 100.0);
  EXPECT_EQ(grid.back().x, 10'000.0);
  EXPECT_EQ(grid.back().pi, 1229u);
  EXPECT_GT(data.all_checkpoints().size(), grid.size());
}

TEST(Pipeline, SingleRowAtGridStart) {
  RunConfig cfg;
  cfg.x_max = 100;
  const auto grid = run_compute(cfg).grid_checkpoints();
  ASSERT_EQ(grid.size(), 1u);
  EXPECT_EQ(grid[0].x, 100.0);
  EXPECT_EQ(grid[0].pi, 25u);
}

TEST(Pipeline, RerunIsByteIdentical) {
  RunConfig cfg;
  cfg.x_max = 100'000;
  EXPECT_EQ(csv_of(run_compute(cfg)), csv_of(run_compute(cfg)));
  cfg.threads = 3;
  cfg.segment_size = 1024;
  RunConfig one = cfg;
  one.threads = 1;
  EXPECT_EQ(csv_of(run_compute(cfg)), csv_of(run_compute(one)));
}

TEST(Pipeline, ResumeMatchesSinglePass) {
  RunConfig small;
  small.x_max = 10'000;
  const auto path = scratch("resume.dat");
  write_checkpoint_file(path, small, run_compute(small));

  RunConfig big;
  big.x_max = 1'000'000;
  const auto resumed = run_compute(big, resume(path, big));
  const auto direct = run_compute(big);
  EXPECT_EQ(csv_of(resumed), csv_of(direct));
  EXPECT_TRUE(resumed.state == direct.state);
}

TEST(Pipeline, ResumeRefusesOtherGrid) {
  RunConfig small;
  small.x_max = 10'000;
  const auto path = scratch("other_grid.dat");
  write_checkpoint_file(path, small, run_compute(small));
  RunConfig other = small;
  other.x_max = 100'000;
  other.grid_ratio = 1.5;
  EXPECT_THROW(resume(path, other), ConfigError);
  other.grid_ratio = small.grid_ratio;
  other.grid_start = 50;
  EXPECT_THROW(resume(path, other), ConfigError);
}

TEST(Pipeline, CompletedRunIsNoOp) {
  RunConfig cfg;
  cfg.x_max = 10'000;
  const auto data = run_compute(cfg);
  const auto again = run_compute(cfg, data);
  EXPECT_EQ(csv_of(again), csv_of(data));
  EXPECT_TRUE(again.state == data.state);
}

TEST(Pipeline, ConfigValidation) {
  RunConfig cfg;
  cfg.x_max = 1;
  EXPECT_THROW(cfg.validate(), ConfigError);
  cfg.x_max = 1000;
  EXPECT_NO_THROW(cfg.validate());
  cfg.segment_size = 1023;
  EXPECT_THROW(cfg.validate(), ConfigError);
  cfg.segment_size = kMinCliSegmentSize;
  cfg.grid_ratio = 1.0;
  EXPECT_THROW(cfg.validate(), ConfigError);
  cfg.grid_ratio = 2.0;
  cfg.threads = 0;
  EXPECT_THROW(cfg.validate(), ConfigError);
}

TEST(Pipeline, HashDependsOnGridOnly) {
  RunConfig a, b;
  a.x_max = 1000;
  b.x_max = 5000;
  b.threads = 4;
  EXPECT_EQ(config_hash(a), config_hash(b));
  b.grid_ratio = 2.0;
  EXPECT_NE(config_hash(a), config_hash(b));
}

}  // namespace
}  // namespace primesum
