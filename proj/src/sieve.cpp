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

#include "primesum/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <string>

#include "primesum/error.hpp"

namespace primesum {

void SieveConfig::validate() const {
  if (limit < 2) throw ConfigError("sieve limit must be at least 2");
  if (limit > kMaxSieveLimit) {
    throw ConfigError("sieve limit " + std::to_string(limit) +
                      " exceeds 2^63 - 1");
  }
  if (segment_size == 0) throw ConfigError("segment size must be positive");
  if (threads == 0) throw ConfigError("thread count must be positive");
  if (start >= limit) throw ConfigError("sieve start must be below the limit");
}

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r > n / r) --r;
  while ((r + 1) <= n / (r + 1)) ++r;
  return r;
}

std::vector<std::uint64_t> base_primes(std::uint64_t bound) {
  std::vector<std::uint64_t> primes;
  if (bound < 2) return primes;
  primes.push_back(2);
  // composite[i] describes the odd number 2i + 1
  const std::uint64_t odd_count = (bound - 1) / 2 + 1;
  std::vector<char> composite(odd_count, 0);
  for (std::uint64_t i = 1; i < odd_count; ++i) {
    if (composite[i]) continue;
    const std::uint64_t p = 2 * i + 1;
    primes.push_back(p);
    if (p > bound / p) continue;
    for (std::uint64_t j = (p * p) / 2; j < odd_count; j += p) composite[j] = 1;
  }
  return primes;
}

namespace {

PrimeSegment sieve_segment(std::uint64_t lo, std::uint64_t hi,
                           const std::vector<std::uint64_t>& base) {
  PrimeSegment seg{lo, hi, {}};
  if (lo < 2 && hi >= 2) seg.primes.push_back(2);

  const std::uint64_t first_odd = std::max<std::uint64_t>(
      (lo + 1) % 2 == 1 ? lo + 1 : lo + 2, 3);
  if (first_odd > hi) return seg;
  const std::uint64_t count = (hi - first_odd) / 2 + 1;
  std::vector<char> composite(count, 0);

  for (std::uint64_t p : base) {
    if (p == 2) continue;
    if (p > hi / p) break;
    // first odd multiple of p that is >= max(p*p, first_odd)
    std::uint64_t m = std::max(p * p, (first_odd + p - 1) / p * p);
    if (m % 2 == 0) m += p;
    for (std::uint64_t j = (m - first_odd) / 2; j < count; j += p) {
      composite[j] = 1;
    }
  }

  seg.primes.reserve(count / 8 + 1);
  for (std::uint64_t j = 0; j < count; ++j) {
    if (!composite[j]) seg.primes.push_back(first_odd + 2 * j);
  }
  return seg;
}

}  // namespace

SegmentStream::SegmentStream(SieveConfig cfg)
    : cfg_(cfg), next_lo_(cfg.start) {
  cfg_.validate();
  base_ = std::make_shared<const std::vector<std::uint64_t>>(
      base_primes(isqrt(cfg_.limit)));
}

void SegmentStream::refill() {
  batch_.clear();
  batch_pos_ = 0;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> windows;
  while (windows.size() < cfg_.threads && next_lo_ < cfg_.limit) {
    const std::uint64_t span = 2 * cfg_.segment_size;
    const std::uint64_t hi =
        cfg_.limit - next_lo_ <= span ? cfg_.limit : next_lo_ + span;
    windows.emplace_back(next_lo_, hi);
    next_lo_ = hi;
  }
  if (windows.size() == 1) {
    batch_.push_back(sieve_segment(windows[0].first, windows[0].second, *base_));
    return;
  }
  std::vector<std::future<PrimeSegment>> pending;
  pending.reserve(windows.size());
  for (auto [lo, hi] : windows) {
    pending.push_back(std::async(std::launch::async, [lo, hi, base = base_] {
      return sieve_segment(lo, hi, *base);
    }));
  }
  for (auto& f : pending) batch_.push_back(f.get());
}

std::optional<PrimeSegment> SegmentStream::next() {
  if (batch_pos_ == batch_.size()) {
    if (next_lo_ >= cfg_.limit) return std::nullopt;
    refill();
  }
  return std::move(batch_[batch_pos_++]);
}

std::vector<PrimeSegment> stream_segments(const SieveConfig& cfg) {
  std::vector<PrimeSegment> out;
  SegmentStream stream(cfg);
  while (auto seg = stream.next()) out.push_back(std::move(*seg));
  return out;
}

std::uint64_t prime_count(std::uint64_t limit, unsigned threads) {
  if (limit < 2) return 0;
  SieveConfig cfg;
  cfg.limit = limit;
  cfg.threads = threads;
  std::uint64_t count = 0;
  SegmentStream stream(cfg);
  while (auto seg = stream.next()) count += seg->primes.size();
  return count;
}

}  // namespace primesum
