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
#include <iosfwd>
#include <span>
#include <string>

#include "primesum/pipeline.hpp"

namespace primesum {

inline constexpr int kCheckpointFormatVersion = 1;
inline constexpr const char* kCheckpointMagic = "primesum-checkpoint";

/// Header fields of a checkpoint file.
struct CheckpointHeader {
  int version = kCheckpointFormatVersion;
  std::uint64_t config_hash = 0;
  double grid_start = 0.0;
  double grid_ratio = 0.0;
  std::uint64_t x_max = 0;
  std::string created;  // ISO-8601 UTC; informational only
};

struct CheckpointFile {
  CheckpointHeader header;
  RunData data;
};

/// Text format: a versioned header (magic line, hash, grid, x_max, creation
/// time, serialized stream state and a_n S_{n-1} tracker), a `columns` line,
/// one `row` per recorded point, and a closing `end` line. Reals are written
/// with 17 significant digits, which round-trips binary64 exactly.
void write_checkpoint(std::ostream& out, const RunConfig& cfg, const RunData& data,
                      const std::string& created);
void write_checkpoint_file(const std::filesystem::path& path, const RunConfig& cfg,
                           const RunData& data);

/// Throws FormatError on a missing magic line, version mismatch, malformed
/// or truncated content; IoError when the file cannot be opened.
CheckpointFile read_checkpoint(std::istream& in);
CheckpointFile read_checkpoint_file(const std::filesystem::path& path);

/// Loads `path` for continuation under `cfg`. Refuses (ConfigError) when the
/// file's grid hash differs from cfg's; the message names both hashes.
RunData resume(const std::filesystem::path& path, const RunConfig& cfg);

/// CSV of the grid checkpoints: x,pi,S,M,E,r_S,r_E_pi,r_E_x,mertens_remainder.
void write_checkpoint_csv(std::ostream& out, std::span<const Checkpoint> checkpoints);
void write_checkpoint_csv_file(const std::filesystem::path& path,
                               std::span<const Checkpoint> checkpoints);

/// %.17g formatting shared by every text output.
std::string format_real(double v);

}  // namespace primesum
