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

#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>

#include "pasw/model.hpp"
#include "pasw/optimizer.hpp"

namespace pasw {

/// Uniform grid over [0, L] in x and, unless `rho_points` is empty, over
/// [0, 1] in rho. Without a rho grid each x uses the analytic best split.
struct GridSpec {
  std::size_t x_points = 10'001;
  std::optional<std::size_t> rho_points;

  void validate() const {
    if (x_points < 2) throw std::invalid_argument("GridSpec: x_points must be >= 2");
    if (rho_points && *rho_points < 2) {
      throw std::invalid_argument("GridSpec: rho_points must be >= 2");
    }
  }
};

namespace detail {

struct GridBest {
  bool found = false;
  double x = 0.0;
  double rho = 0.0;
  double snr = 0.0;
  double dist = 0.0;  // |x - x_u|

  // Higher SNR wins; ties go to the point nearer x_u, then to smaller x,
  // then to larger rho. The result does not depend on visiting order.
  void offer(double cand_x, double cand_rho, double cand_snr, double x_u) {
    const double cand_dist = std::abs(cand_x - x_u);
    bool better = !found || cand_snr > snr;
    if (found && cand_snr == snr) {
      better = cand_dist < dist ||
               (cand_dist == dist && (cand_x < x || (cand_x == x && cand_rho > rho)));
    }
    if (better) {
      found = true;
      x = cand_x;
      rho = cand_rho;
      snr = cand_snr;
      dist = cand_dist;
    }
  }
};

}  // namespace detail

/// Exhaustive grid search for the constrained maximum. Independent of the
/// Lambert-W route: it only evaluates f(x) and the EH constraint pointwise.
inline Solution grid_solve(const SystemParams& p, const GridSpec& spec = {}) {
  spec.validate();
  const double dx = p.L() / static_cast<double>(spec.x_points - 1);
  const double q_floor = p.q0() * (1.0 - feasibility_slack);
  detail::GridBest best;

  for (std::size_t i = 0; i < spec.x_points; ++i) {
    const double x = i + 1 == spec.x_points ? p.L() : dx * static_cast<double>(i);
    if (!spec.rho_points) {
      if (const auto rho = rho_star_given_x(p, x)) {
        best.offer(x, *rho, average_snr(p, x, *rho), p.x_u());
      }
      continue;
    }
    const std::size_t n_rho = *spec.rho_points;
    const double f = mean_channel_power(p, x);
    for (std::size_t j = 0; j < n_rho; ++j) {
      const double rho =
          j + 1 == n_rho ? 1.0 : static_cast<double>(j) / static_cast<double>(n_rho - 1);
      if (p.zeta() * (1.0 - rho) * p.P_t() * f < q_floor) continue;
      best.offer(x, rho, p.lambda() * rho * f, p.x_u());
    }
  }

  if (!best.found) return Solution::infeasible();
  const Status status =
      best.rho <= degenerate_rho ? Status::DegenerateBoundary : Status::Feasible;
  return {status, make_operating_point(p, best.x, best.rho), false};
}

}  // namespace pasw
