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

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "pasw/model.hpp"
#include "pasw/optimizer.hpp"

namespace pasw {

enum class SchemeId { Proposed, BM0, BM1, BM2, BM3 };

inline constexpr std::array<SchemeId, 5> all_schemes{
    SchemeId::Proposed, SchemeId::BM0, SchemeId::BM1, SchemeId::BM2, SchemeId::BM3};

constexpr std::string_view to_string(SchemeId s) noexcept {
  switch (s) {
    case SchemeId::Proposed: return "proposed";
    case SchemeId::BM0: return "bm0";
    case SchemeId::BM1: return "bm1";
    case SchemeId::BM2: return "bm2";
    case SchemeId::BM3: return "bm3";
  }
  return "unknown";
}

inline SchemeId parse_scheme(std::string_view token) {
  for (SchemeId s : all_schemes) {
    if (to_string(s) == token) return s;
  }
  throw std::invalid_argument("unknown scheme '" + std::string(token) +
                              "' (expected proposed|bm0|bm1|bm2|bm3)");
}

/// Decision variables pinned from outside a scheme, e.g. by a sweep over x
/// or rho. A pinned variable replaces the scheme's own rule for it.
struct Pinned {
  std::optional<double> x = std::nullopt;
  std::optional<double> rho = std::nullopt;
};

namespace detail {

// Position rule of each scheme when x is not pinned.
enum class PositionRule { Optimize, Midpoint };
// Split rule of each scheme when rho is not pinned.
enum class SplitRule { Optimize, One, Half };

struct SchemeRules {
  PositionRule position;
  SplitRule split;
  bool enforce_eh;  // false: EH requirement ignored (bm0) or only flagged (bm3)
  bool flag_eh;
};

constexpr SchemeRules rules_of(SchemeId s) noexcept {
  switch (s) {
    case SchemeId::Proposed: return {PositionRule::Optimize, SplitRule::Optimize, true, false};
    case SchemeId::BM0: return {PositionRule::Optimize, SplitRule::One, false, false};
    case SchemeId::BM1: return {PositionRule::Optimize, SplitRule::Half, true, false};
    case SchemeId::BM2: return {PositionRule::Midpoint, SplitRule::Optimize, true, false};
    case SchemeId::BM3: return {PositionRule::Midpoint, SplitRule::Half, false, true};
  }
  return {PositionRule::Optimize, SplitRule::Optimize, true, false};
}

inline Solution finish(const SystemParams& p, double x, double rho, const SchemeRules& r) {
  const OperatingPoint op = make_operating_point(p, x, rho);
  const bool short_of_eh = op.avg_eh < p.q0() * (1.0 - feasibility_slack);
  if (r.enforce_eh && short_of_eh) return Solution::infeasible();
  const Status status = r.enforce_eh && rho <= degenerate_rho && p.q0() > 0.0
                            ? Status::DegenerateBoundary
                            : Status::Feasible;
  return {status, op, r.flag_eh && short_of_eh};
}

}  // namespace detail

/// Position closest to x_u at which a fixed split rho still meets the EH
/// requirement, i.e. the feasible interval for requirement q0 / (1 - rho).
inline std::optional<double> best_position_for_split(const SystemParams& p, double rho) {
  if (p.q0() == 0.0) return clip(p.x_u(), 0.0, p.L());
  if (rho >= 1.0) return std::nullopt;
  const FeasibilityRegion region = feasibility_region_for(p, p.q0() / (1.0 - rho));
  if (!region.interval) return std::nullopt;
  return clip(p.x_u(), region.interval->lo, region.interval->hi);
}

/// Evaluates one scheme, with optional pinned decision variables.
///
///   proposed  optimize x and rho jointly
///   bm0       rho = 1, x nearest x_u, EH requirement ignored
///   bm1       rho = 0.5, x nearest x_u among EH-feasible positions
///   bm2       x = L/2, rho optimized for that position
///   bm3       x = L/2, rho = 0.5, EH shortfall reported via eh_violation
inline Solution evaluate_scheme(const SystemParams& p, SchemeId scheme,
                                const Pinned& pinned = {}) {
  using detail::PositionRule;
  using detail::SplitRule;
  const detail::SchemeRules r = detail::rules_of(scheme);

  if (pinned.rho) detail::check_split(*pinned.rho);
  if (pinned.x && !(*pinned.x >= 0.0 && *pinned.x <= p.L())) {
    throw std::domain_error("pinned x must lie in [0, L]");
  }

  if (scheme == SchemeId::Proposed && !pinned.x && !pinned.rho) return solve(p);

  std::optional<double> x;
  if (pinned.x) x = *pinned.x;
  else if (r.position == PositionRule::Midpoint) x = 0.5 * p.L();

  std::optional<double> rho;
  if (pinned.rho) rho = *pinned.rho;
  else if (r.split == SplitRule::One) rho = 1.0;
  else if (r.split == SplitRule::Half) rho = 0.5;

  if (!x) {
    // Position is optimized for a known split.
    if (!r.enforce_eh) return detail::finish(p, clip(p.x_u(), 0.0, p.L()), *rho, r);
    x = best_position_for_split(p, *rho);
    if (!x) return Solution::infeasible();
    return detail::finish(p, *x, *rho, r);
  }
  if (!rho) {
    // Split is optimized for a known position.
    rho = rho_star_given_x(p, *x);
    if (!rho) return Solution::infeasible();
    if (*rho <= degenerate_rho) rho = 0.0;
  }
  return detail::finish(p, *x, *rho, r);
}

}  // namespace pasw
