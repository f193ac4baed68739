// Copyright 2026 The tcldpc Authors
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
#include <numbers>

namespace tcldpc {

// Complementary error function in extended precision, accurate to well
// below 1e-12 relative error over the arguments union bounds need (x up to
// ~25, where erfc underflows double anyway).  Uses the Maclaurin series for
// small arguments and the asymptotic continued fraction, evaluated with the
// modified Lentz algorithm, beyond.  Implemented here so bound computations
// do not inherit platform libm differences; the test suite pins it against
// an arbitrary-precision oracle.
inline long double erfc_accurate(long double x) {
  if (x < 0.0L) return 2.0L - erfc_accurate(-x);
  constexpr long double inv_sqrt_pi = 0.564189583547756286948079451560772586L;

  if (x < 2.0L) {
    // erf(x) = 2/sqrt(pi) * sum_n (-1)^n x^(2n+1) / (n! (2n+1))
    const long double x2 = x * x;
    long double term = x;  // n = 0 term without the prefactor
    long double sum = x;
    for (int n = 1; n < 200; ++n) {
      term *= -x2 / n;
      const long double contrib = term / (2 * n + 1);
      sum += contrib;
      if (std::fabs(contrib) < 1e-22L * std::fabs(sum)) break;
    }
    return 1.0L - 2.0L * inv_sqrt_pi * sum;
  }

  // erfc(x) = exp(-x^2)/sqrt(pi) * 1/(x + 1/2/(x + 1/(x + 3/2/(x + ...))))
  const long double tiny = 1e-4930L;
  long double f = x, c = x, d = 0.0L;
  for (int n = 1; n < 400; ++n) {
    const long double a = 0.5L * n;
    d = x + a * d;
    if (d == 0.0L) d = tiny;
    c = x + a / c;
    if (c == 0.0L) c = tiny;
    d = 1.0L / d;
    const long double delta = c * d;
    f *= delta;
    if (std::fabs(delta - 1.0L) < 1e-20L) break;
  }
  return std::exp(-x * x) * inv_sqrt_pi / f;
}

}  // namespace tcldpc
