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

// Reference values. Each block names the oracle that produced it; all
// high-precision values were computed with 40-digit mpmath and agree with the
// trial-division / long-double oracle in tests/oracle to at least 18 digits.

#pragma once

#include <cstdint>

namespace primesum::fixtures {

// sqrt(log p / p) for p = 2, 3 and their doubled product.
inline constexpr double kWeight2 = 0.58870501125773734551;
inline constexpr double kWeight3 = 0.60514799530586171352;
inline constexpr double kTwiceWeight2Weight3 = 0.71250731477826901274;
inline constexpr double kM2 = 0.34657359027997265471;  // log 2 / 2

// Sums over the primes {2, 3, 5, 7}, i.e. at x = 10.
inline constexpr double kS10 = 2.2884492619932487754;
inline constexpr double kM10 = 1.3126524331402550037;
inline constexpr double kE10 = 3.9243475915771899702;
inline constexpr double kRS10 = 1.0981183082402295318;
inline constexpr double kREpi10 = 0.98108689789429749255;
inline constexpr double kREx10 = 0.90361442640927231786;
inline constexpr double kMertens10 = -0.98993265985379068034;

// Trial division to 1e6 with extended-precision accumulation.
inline constexpr std::uint64_t kPi1e6 = 78498;
inline constexpr double kS1e6 = 586.82519310647923218549;
inline constexpr double kM1e6 = 12.483585396239194623471;
inline constexpr double kE1e6 = 344351.32367906040177220;

// 2 sum_{i<j<=5000} a_i a_j; p_5000 = 48611.
inline constexpr double kPairSum5000 = 22079.614183570521668770;
inline constexpr std::uint64_t kPrime5000 = 48611;

inline constexpr double kWAtE = 0.60653065971263342360;  // e^{-1/2}
// \int_2^10 dt / sqrt(t log t)
inline constexpr double kInvRootIntegral2To10 = 2.8630264312956003597;
// (\int_2^x dt / sqrt(t log t)) / sqrt(x / log x)
inline constexpr double kMainTermGrowth1e3 = 2.3163294972563848747;
inline constexpr double kMainTermGrowth1e6 = 2.1933032685400925146;

}  // namespace primesum::fixtures
