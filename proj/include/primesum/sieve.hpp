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
#include <memory>
#include <optional>
#include <vector>

namespace primesum {

/// Largest accepted sieve limit (2^63 - 1).
inline constexpr std::uint64_t kMaxSieveLimit = (std::uint64_t{1} << 63) - 1;
inline constexpr std::uint64_t kDefaultSegmentSize = std::uint64_t{1} << 20;

struct SieveConfig {
  /// Inclusive upper bound.
  std::uint64_t limit = 2;
  /// Odd numbers examined per segment.
  std::uint64_t segment_size = kDefaultSegmentSize;
  /// Exclusive lower bound of the first segment. Primes in (start, limit] are
  /// produced; start = 1 covers everything. Used to continue a resumed run.
  std::uint64_t start = 1;
  /// Segments sieved concurrently; delivery order is unaffected.
  unsigned threads = 1;

  /// Throws ConfigError on limit < 2, limit > 2^63 - 1, segment_size == 0,
  /// threads == 0, or start >= limit.
  void validate() const;
};

/// Primes in the half-open window (lo, hi], ascending.
struct PrimeSegment {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  std::vector<std::uint64_t> primes;
};

/// All primes <= bound, ascending. Empty for bound < 2.
std::vector<std::uint64_t> base_primes(std::uint64_t bound);

/// floor(sqrt(n)) computed exactly.
std::uint64_t isqrt(std::uint64_t n);

/// Ordered stream of segments tiling (start, limit].
///
/// Each call to next() hands out the following segment. With threads > 1 a
/// batch of segments is sieved concurrently and then released one by one in
/// ascending order, so consumers always see the same sequence.
class SegmentStream {
 public:
  explicit SegmentStream(SieveConfig cfg);

  std::optional<PrimeSegment> next();

  const SieveConfig& config() const { return cfg_; }

 private:
  void refill();

  SieveConfig cfg_;
  std::shared_ptr<const std::vector<std::uint64_t>> base_;
  std::uint64_t next_lo_;
  std::vector<PrimeSegment> batch_;
  std::size_t batch_pos_ = 0;
};

/// Convenience: materialize every segment of the stream.
std::vector<PrimeSegment> stream_segments(const SieveConfig& cfg);

/// Calls fn(prime) for every prime in (cfg.start, cfg.limit], ascending.
template <typename Fn>
void for_each_prime(const SieveConfig& cfg, Fn&& fn) {
  SegmentStream stream(cfg);
  while (auto seg = stream.next()) {
    for (std::uint64_t p : seg->primes) fn(p);
  }
}

/// pi(limit): the number of primes <= limit.
std::uint64_t prime_count(std::uint64_t limit, unsigned threads = 1);

}  // namespace primesum
