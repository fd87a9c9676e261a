// SPDX-License-Identifier: Apache-2.0
//
// pasw: joint pinching-antenna placement and power splitting for SWIPT
// under probabilistic LoS blockage.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

// Test-only reference routines. They deliberately avoid the library's own
// solution path: plain bisection in long double on the defining equations.

#pragma once

#include <cmath>
#include <functional>

namespace pasw::testing {

/// Root of an increasing function g on [lo, hi] by bisection.
inline long double bisect_increasing(const std::function<long double(long double)>& g,
                                     long double lo, long double hi, int iters = 200) {
  for (int i = 0; i < iters; ++i) {
    const long double mid = 0.5L * (lo + hi);
    if (g(mid) > 0) hi = mid;
    else lo = mid;
  }
  return 0.5L * (lo + hi);
}

/// W0(a) for a >= 0 from w e^w = a.
inline long double lambert_bisection(long double a) {
  const long double hi = a < 1 ? 1.0L : std::log(a) + 1.0L;
  return bisect_increasing([a](long double w) { return w * std::exp(w) - a; }, 0.0L, hi);
}

/// Squared-distance threshold t with t e^{beta t} = eta zeta P_t / q0.
inline long double threshold_bisection(long double eta, long double zeta, long double pt,
                                       long double beta, long double q0) {
  const long double k = eta * zeta * pt / q0;
  return bisect_increasing([=](long double t) { return t * std::exp(beta * t) - k; }, 0.0L,
                           k + 1.0L);
}

/// f(x) evaluated from scratch in long double.
inline long double channel_power_ld(long double fc, long double beta, long double x,
                                    long double xu, long double yu, long double zp) {
  const long double pi = 3.141592653589793238462643383279502884L;
  const long double c = 299792458.0L;
  const long double k = c / (4.0L * pi * fc);
  const long double d2 = (x - xu) * (x - xu) + yu * yu + zp * zp;
  return k * k * std::exp(-beta * d2) / d2;
}

}  // namespace pasw::testing
