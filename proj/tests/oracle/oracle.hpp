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

// Brute-force reference computations for the test suites. Nothing here
// touches the library's sieve, summation or quadrature code.

#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace primesum::oracle {

bool is_prime_by_trial_division(std::uint64_t n);

/// Primes <= limit, each certified by trial division against the primes found
/// so far.
std::vector<std::uint64_t> trial_division_primes(std::uint64_t limit);

/// Sums over the given primes accumulated in 80-bit long double with Kahan
/// compensation.
struct ExtendedSums {
  std::uint64_t pi = 0;
  long double S = 0.0L;
  long double M = 0.0L;
  long double E = 0.0L;  // S^2 - M
};

ExtendedSums extended_sums(std::span<const std::uint64_t> primes);

/// 2 * sum_{i<j} a_i a_j in long double over the first n primes.
long double pair_sum_extended(std::span<const std::uint64_t> primes);

/// Romberg integration on a uniform grid of 2^levels panels.
double romberg(const std::function<double(double)>& f, double a, double b, int levels);

}  // namespace primesum::oracle
