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

#include <cmath>

#include "primesum/neumaier.hpp"

namespace primesum {

/// Unevaluated sum hi + lo with |lo| <= ulp(hi) / 2 (about 106 bits).
struct DoubleDouble {
  double hi = 0.0;
  double lo = 0.0;

  double value() const { return hi + lo; }
};

inline DoubleDouble two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  const double e = (a - (s - bb)) + (b - bb);
  return {s, e};
}

inline DoubleDouble two_prod(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

inline DoubleDouble renormalize(double hi, double lo) { return two_sum(hi, lo); }

/// The compensated value of a Neumaier sum without rounding it to a double.
inline DoubleDouble to_double_double(const NeumaierSum& s) {
  return two_sum(s.raw_sum(), s.residue());
}

inline DoubleDouble operator-(DoubleDouble a, DoubleDouble b) {
  const DoubleDouble s = two_sum(a.hi, -b.hi);
  return renormalize(s.hi, s.lo + (a.lo - b.lo));
}

inline DoubleDouble square(DoubleDouble a) {
  const DoubleDouble p = two_prod(a.hi, a.hi);
  return renormalize(p.hi, p.lo + 2.0 * a.hi * a.lo);
}

}  // namespace primesum
