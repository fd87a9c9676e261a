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

#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace pasw {

struct LambertResult {
  double w = 0.0;
  int iterations = 0;
  double residual = 0.0;  // |w e^w - a|
};

/// Principal branch W0 on [0, inf) by Halley iteration.
///
/// Starts from ln(1 + a) for a <= e and ln(a) - ln(ln(a)) above it. Stops when
/// the relative step falls below 1e-15, when the residual relative to
/// max(1, a) falls below 1e-13, or after 64 iterations.
inline LambertResult lambert_w0_detailed(double a) {
  if (!std::isfinite(a) || a < 0.0) {
    throw std::domain_error("lambert_w0: argument must be finite and >= 0, got " +
                            std::to_string(a));
  }
  LambertResult r;
  if (a == 0.0) return r;

  constexpr int max_iterations = 64;
  constexpr double step_tol = 1e-15;
  constexpr double residual_tol = 1e-13;
  const double scale = std::max(1.0, a);

  double w = a <= std::numbers::e ? std::log1p(a) : std::log(a) - std::log(std::log(a));
  for (int i = 1; i <= max_iterations; ++i) {
    const double ew = std::exp(w);
    const double f = w * ew - a;
    r.iterations = i;
    if (std::abs(f) / scale < residual_tol) break;
    const double wp1 = w + 1.0;
    const double step = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1));
    w -= step;
    if (std::abs(step) <= step_tol * std::abs(w)) break;
  }
  r.w = w;
  r.residual = std::abs(w * std::exp(w) - a);
  return r;
}

inline double lambert_w0(double a) { return lambert_w0_detailed(a).w; }

}  // namespace pasw
