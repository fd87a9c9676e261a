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
#include <limits>
#include <optional>
#include <string_view>

#include "pasw/lambert_w.hpp"
#include "pasw/model.hpp"

namespace pasw {

/// Relative slack applied to every EH-feasibility membership test, so that
/// points on the Lambert-W boundary do not flap with rounding.
inline constexpr double feasibility_slack = 1e-10;

/// Split ratios at or below this are reported as a degenerate boundary.
inline constexpr double degenerate_rho = 1e-12;

enum class Status { Feasible, DegenerateBoundary, Infeasible };

constexpr std::string_view to_string(Status s) noexcept {
  switch (s) {
    case Status::Feasible: return "feasible";
    case Status::DegenerateBoundary: return "degenerate_boundary";
    case Status::Infeasible: return "infeasible";
  }
  return "unknown";
}

struct OperatingPoint {
  double x = 0.0;
  double rho = 0.0;
  double avg_snr = 0.0;
  double avg_eh = 0.0;  // [W]
};

struct Solution {
  Status status = Status::Infeasible;
  std::optional<OperatingPoint> point;  // empty iff Infeasible
  bool eh_violation = false;            // set by schemes that skip the EH check

  bool feasible() const noexcept { return status != Status::Infeasible; }
  static Solution infeasible() { return {}; }
};

/// Closed interval [lo, hi] with lo <= hi.
struct Interval {
  double lo;
  double hi;

  bool contains(double x) const noexcept { return x >= lo && x <= hi; }
  double width() const noexcept { return hi - lo; }
  bool operator==(const Interval&) const = default;
};

/// Projects a onto [lo, hi].
constexpr double clip(double a, double lo, double hi) noexcept {
  return std::min(std::max(a, lo), hi);
}

struct FeasibilityRegion {
  double t_th;       // squared-distance threshold [m^2]; +inf when q0 == 0
  double r_squared;  // t_th - (y_u^2 + z_p^2), may be negative
  std::optional<Interval> interval;  // [x_u - R, x_u + R] intersected with [0, L]

  double radius() const noexcept { return std::sqrt(std::max(0.0, r_squared)); }
};

/// Feasible positions when the antenna must deliver `required_q` watts of
/// average harvested power with the whole signal routed to EH.
///
/// f(x) >= q / (zeta P_t) is equivalent to d^2(x) <= t_th with
/// t_th = W(beta eta zeta P_t / q) / beta.
inline FeasibilityRegion feasibility_region_for(const SystemParams& p,
                                                double required_q) {
  const Interval domain{0.0, p.L()};
  if (required_q <= 0.0) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    return {inf, inf, domain};
  }
  const double arg = p.beta() * p.eta() * p.zeta() * p.P_t() / required_q;
  if (!std::isfinite(arg)) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    return {inf, inf, domain};
  }
  const double t_th = lambert_w0(arg) / p.beta();
  double r2 = t_th - p.offset_squared();
  FeasibilityRegion region{t_th, r2, std::nullopt};
  if (r2 < 0.0) {
    if (r2 < -feasibility_slack * t_th) return region;
    r2 = 0.0;
  }
  const double r = std::sqrt(r2);
  const double lo = std::max(domain.lo, p.x_u() - r);
  const double hi = std::min(domain.hi, p.x_u() + r);
  if (lo <= hi) region.interval = Interval{lo, hi};
  return region;
}

inline FeasibilityRegion feasibility_region(const SystemParams& p) {
  return feasibility_region_for(p, p.q0());
}

/// Largest split ratio meeting the EH constraint at position x, or nullopt
/// when x cannot meet it even with rho = 0.
inline std::optional<double> rho_star_given_x(const SystemParams& p, double x) {
  const double f = mean_channel_power(p, x);
  const double thr = p.eh_threshold();
  if (thr == 0.0) return 1.0;
  if (f < thr * (1.0 - feasibility_slack)) return std::nullopt;
  // (f - thr) / f is 1 - thr / f without the extra rounding in the ratio.
  double rho = std::clamp((f - thr) / f, 0.0, 1.0);
  // Near rho = 1 the rounding of rho dominates 1 - rho; step down a few ulps
  // until the harvested power actually reaches q0.
  for (int i = 0; i < 4 && rho > 0.0 &&
                  p.zeta() * (1.0 - rho) * p.P_t() * f < p.q0();
       ++i) {
    rho = std::nextafter(rho, 0.0);
  }
  return rho;
}

/// Reduced objective lambda (f(x) - q0 / (zeta P_t)) for feasible x.
inline std::optional<double> snr_envelope(const SystemParams& p, double x) {
  const double f = mean_channel_power(p, x);
  const double thr = p.eh_threshold();
  if (f < thr * (1.0 - feasibility_slack)) return std::nullopt;
  return p.lambda() * std::max(0.0, f - thr);
}

inline OperatingPoint make_operating_point(const SystemParams& p, double x,
                                           double rho) {
  return {x, rho, average_snr(p, x, rho), average_harvested_power(p, x, rho)};
}

/// Global optimum of the joint placement / power-splitting problem.
///
/// f(x) decreases strictly with d^2(x), so the best feasible position is the
/// point of the feasible interval closest to x_u; rho then takes the largest
/// value the EH constraint allows.
inline Solution solve(const SystemParams& p) {
  const FeasibilityRegion region = feasibility_region(p);
  if (!region.interval) return Solution::infeasible();
  const double x = clip(p.x_u(), region.interval->lo, region.interval->hi);
  const std::optional<double> rho = rho_star_given_x(p, x);
  if (!rho) return Solution::infeasible();
  if (*rho <= degenerate_rho) {
    return {Status::DegenerateBoundary, make_operating_point(p, x, 0.0), false};
  }
  return {Status::Feasible, make_operating_point(p, x, *rho), false};
}

}  // namespace pasw
