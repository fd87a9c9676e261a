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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "pasw/optimizer.hpp"
#include "reference_oracles.hpp"

namespace {

using pasw::ParamValues;
using pasw::Status;
using pasw::SystemParams;

SystemParams with_q0(double q0) {
  ParamValues v;
  v.q0 = q0;
  return SystemParams(v);
}

// q0 that puts the EH boundary exactly at squared distance t.
double q0_for_threshold(const SystemParams& p, double t) {
  return p.eta() * p.zeta() * p.P_t() * std::exp(-p.beta() * t) / t;
}

ParamValues random_values(std::mt19937_64& gen) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  ParamValues v;
  v.f_c = (6.0 + 94.0 * u(gen)) * 1e9;
  v.P_t = pasw::dbm_to_watts(10.0 + 30.0 * u(gen));
  v.beta = std::pow(10.0, -4.0 + 3.0 * u(gen));
  v.q0 = std::pow(10.0, -12.0 + 6.0 * u(gen));
  v.x_u = -10.0 + 70.0 * u(gen);
  v.y_u = 10.0 * u(gen);
  v.z_p = 1.0 + 14.0 * u(gen);
  return v;
}

TEST(RhoStarGivenX, Examples) {
  const SystemParams vacuous = with_q0(0.0);
  for (double x : {0.0, 5.0, 50.0}) EXPECT_EQ(pasw::rho_star_given_x(vacuous, x), 1.0);

  const SystemParams p;
  // 1 - q0 / (zeta P_t f(5)) at 40 digits: 0.67480792160580556966
  ASSERT_TRUE(pasw::rho_star_given_x(p, 5.0).has_value());
  EXPECT_NEAR(*pasw::rho_star_given_x(p, 5.0), 0.6748079216058056, 1e-14);

  // q0 placed so that f(20) is exactly the requirement.
  ParamValues v;
  v.q0 = 0.6 * 10.0 * pasw::mean_channel_power(p, 20.0);
  const SystemParams edge(v);
  ASSERT_TRUE(pasw::rho_star_given_x(edge, 20.0).has_value());
  EXPECT_LE(*pasw::rho_star_given_x(edge, 20.0), 1e-15);
  EXPECT_FALSE(pasw::rho_star_given_x(edge, 20.5).has_value());
  EXPECT_GT(*pasw::rho_star_given_x(edge, 19.5), 0.0);
}

TEST(FeasibilityRegion, DefaultScenario) {
  const SystemParams p;
  const auto region = pasw::feasibility_region(p);
  // t e^{beta t} = eta zeta P_t / q0 at 40 digits: t = 317.18085774319029457
  const double oracle = static_cast<double>(
      pasw::testing::threshold_bisection(p.eta(), 0.6L, 10.0L, 1e-3L, 1e-8L));
  EXPECT_NEAR(region.t_th, oracle, 1e-10);
  EXPECT_NEAR(region.t_th, 317.1808577431903, 1e-10);
  EXPECT_NEAR(region.radius(), 13.86293106609098, 1e-11);
  ASSERT_TRUE(region.interval.has_value());
  EXPECT_EQ(region.interval->lo, 0.0);
  EXPECT_NEAR(region.interval->hi, 18.86293106609098, 1e-11);
}

TEST(FeasibilityRegion, StrictRequirementIsEmpty) {
  const auto region = pasw::feasibility_region(with_q0(1e-4));
  EXPECT_NEAR(region.t_th, 0.04355499315449868, 1e-15);
  EXPECT_LT(region.r_squared, 0.0);
  EXPECT_FALSE(region.interval.has_value());
}

TEST(FeasibilityRegion, VacuousRequirementCoversWaveguide) {
  const auto region = pasw::feasibility_region(with_q0(0.0));
  ASSERT_TRUE(region.interval.has_value());
  EXPECT_EQ(*region.interval, (pasw::Interval{0.0, 50.0}));
}

TEST(FeasibilityRegion, ContractsWithRequirementAndBlockage) {
  std::mt19937_64 gen(11);
  for (int i = 0; i < 500; ++i) {
    ParamValues v = random_values(gen);
    const SystemParams base(v);
    const auto r0 = pasw::feasibility_region(base);

    ParamValues vq = v;
    vq.q0 *= 1.0 + std::uniform_real_distribution<double>(0.01, 10.0)(gen);
    const auto rq = pasw::feasibility_region(SystemParams(vq));
    EXPECT_LE(rq.t_th, r0.t_th);

    ParamValues vb = v;
    vb.beta *= 1.0 + std::uniform_real_distribution<double>(0.01, 10.0)(gen);
    const auto rb = pasw::feasibility_region(SystemParams(vb));
    EXPECT_LE(rb.t_th, r0.t_th);

    for (const auto& smaller : {rq, rb}) {
      if (!smaller.interval) continue;
      ASSERT_TRUE(r0.interval.has_value());
      EXPECT_GE(smaller.interval->lo, r0.interval->lo);
      EXPECT_LE(smaller.interval->hi, r0.interval->hi);
    }
  }
}

TEST(FeasibilityRegion, EveryInteriorPointMeetsRequirement) {
  std::mt19937_64 gen(12);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int checked = 0;
  for (int i = 0; i < 2000; ++i) {
    const SystemParams p(random_values(gen));
    const auto region = pasw::feasibility_region(p);
    if (!region.interval) continue;
    for (double t : {0.0, u(gen), u(gen), 1.0}) {
      const double x = region.interval->lo + t * region.interval->width();
      const auto rho = pasw::rho_star_given_x(p, x);
      ASSERT_TRUE(rho.has_value());
      EXPECT_GE(pasw::average_harvested_power(p, x, *rho), p.q0() * (1.0 - 1e-10));
      ++checked;
    }
  }
  EXPECT_GT(checked, 400);
}

TEST(Solve, DefaultScenario) {
  const SystemParams p;
  const auto sol = pasw::solve(p);
  EXPECT_EQ(sol.status, Status::Feasible);
  ASSERT_TRUE(sol.point.has_value());
  EXPECT_EQ(sol.point->x, 5.0);
  EXPECT_NEAR(sol.point->rho, 0.6748079216058056, 1e-14);
  // lambda (f(5) - q0 / (zeta P_t)) = 3458.5094289402834979
  EXPECT_NEAR(sol.point->avg_snr, 3458.509428940283, 3458.5 * 1e-13);
  EXPECT_NEAR(sol.point->avg_eh, 1e-8, 1e-8 * 1e-13);
}

TEST(Solve, ClipsToWaveguideStart) {
  ParamValues v;
  v.x_u = -1.0;
  const SystemParams probe(v);
  v.q0 = q0_for_threshold(probe, 25.0 + probe.offset_squared());  // R = 5
  const SystemParams p(v);
  EXPECT_NEAR(pasw::feasibility_region(p).radius(), 5.0, 1e-9);
  const auto sol = pasw::solve(p);
  EXPECT_EQ(sol.status, Status::Feasible);
  EXPECT_EQ(sol.point->x, 0.0);
}

TEST(Solve, InfeasibleCases) {
  EXPECT_EQ(pasw::solve(with_q0(1e-4)).status, Status::Infeasible);
  EXPECT_FALSE(pasw::solve(with_q0(1e-4)).point.has_value());

  // Nonempty ball [x_u - R, x_u + R] entirely left of the waveguide.
  ParamValues v;
  v.x_u = -30.0;
  const SystemParams p(v);
  const auto region = pasw::feasibility_region(p);
  EXPECT_GT(region.r_squared, 0.0);
  EXPECT_FALSE(region.interval.has_value());
  EXPECT_EQ(pasw::solve(p).status, Status::Infeasible);
}

TEST(Solve, ZeroRadiusIsDegenerateBoundary) {
  ParamValues v;
  const SystemParams probe(v);
  v.q0 = q0_for_threshold(probe, probe.offset_squared());
  const SystemParams p(v);
  const auto sol = pasw::solve(p);
  EXPECT_EQ(sol.status, Status::DegenerateBoundary);
  ASSERT_TRUE(sol.point.has_value());
  EXPECT_NEAR(sol.point->x, 5.0, 1e-3);
  EXPECT_EQ(sol.point->rho, 0.0);
  EXPECT_EQ(sol.point->avg_snr, 0.0);
  EXPECT_GE(sol.point->avg_eh, v.q0 * (1.0 - 1e-10));
}

TEST(Solve, VacuousRequirementIsUnconstrained) {
  ParamValues v;
  v.q0 = 0.0;
  v.x_u = 72.0;
  const auto sol = pasw::solve(SystemParams(v));
  EXPECT_EQ(sol.status, Status::Feasible);
  EXPECT_EQ(sol.point->x, 50.0);
  EXPECT_EQ(sol.point->rho, 1.0);
}

TEST(Solve, OptimalPositionMinimizesDistanceOverInterval) {
  std::mt19937_64 gen(13);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const SystemParams p(random_values(gen));
    const auto sol = pasw::solve(p);
    const auto region = pasw::feasibility_region(p);
    EXPECT_EQ(sol.feasible(), region.interval.has_value());
    if (!sol.point) continue;
    const double d2_star = pasw::squared_distance(p, sol.point->x);
    for (int k = 0; k < 5; ++k) {
      const double x = region.interval->lo + u(gen) * region.interval->width();
      EXPECT_LE(d2_star, pasw::squared_distance(p, x));
    }
    if (sol.status == Status::Feasible) {
      const double expected =
          p.lambda() * (pasw::mean_channel_power(p, sol.point->x) - p.eh_threshold());
      EXPECT_NEAR(sol.point->avg_snr, expected, 1e-12 * expected);
      EXPECT_GE(sol.point->avg_eh, p.q0() * (1.0 - 1e-15));
    }
  }
}

TEST(SnrEnvelope, Examples) {
  const SystemParams p;
  for (double x : {0.0, 5.0, 12.5, 18.0}) {
    const auto env = pasw::snr_envelope(p, x);
    ASSERT_TRUE(env.has_value());
    const double via_rho = pasw::average_snr(p, x, *pasw::rho_star_given_x(p, x));
    EXPECT_NEAR(*env, via_rho, 1e-12 * via_rho);
    // constant offset from the no-EH curve
    const double no_eh = pasw::average_snr(p, x, 1.0);
    EXPECT_NEAR(no_eh - *env, p.lambda() * p.eh_threshold(), 1e-12 * no_eh);
  }
  EXPECT_FALSE(pasw::snr_envelope(p, 30.0).has_value());

  const SystemParams vacuous = with_q0(0.0);
  EXPECT_EQ(*pasw::snr_envelope(vacuous, 7.0), pasw::average_snr(vacuous, 7.0, 1.0));

  ParamValues v;
  v.q0 = 0.6 * 10.0 * pasw::mean_channel_power(p, 20.0);
  const auto at_edge = pasw::snr_envelope(SystemParams(v), 20.0);
  ASSERT_TRUE(at_edge.has_value());
  EXPECT_LE(*at_edge, 1e-15 * p.lambda() * v.q0);
}

}  // namespace
