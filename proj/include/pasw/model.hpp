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
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>

namespace pasw {

inline constexpr double speed_of_light = 299'792'458.0;  // m/s

/// Raw scenario values in SI units (Hz, W, m). Carries no invariants of its
/// own; `SystemParams` validates it.
struct ParamValues {
  double f_c = 28e9;      // carrier frequency [Hz]
  double P_t = 10.0;      // transmit power [W]
  double sigma2 = 1e-11;  // noise power [W]
  double zeta = 0.6;      // RF-to-DC efficiency
  double beta = 1e-3;     // blockage density [1/m^2]
  double q0 = 1e-8;       // minimum average harvested power [W]
  double L = 50.0;        // waveguide length [m]
  double z_p = 10.0;      // waveguide height [m]
  double x_u = 5.0;       // user position along the waveguide axis [m]
  double y_u = 5.0;       // user lateral offset [m]

  bool operator==(const ParamValues&) const = default;
};

/// Validated, immutable scenario. The free-space coefficient
/// eta = (c / (4 pi f_c))^2 and the SNR scale lambda = P_t / sigma2 are
/// computed once on construction.
class SystemParams {
 public:
  SystemParams() : SystemParams(ParamValues{}) {}

  explicit SystemParams(const ParamValues& v) : v_(v) {
    require(v.f_c > 0.0, "f_c", "must be > 0");
    require(v.P_t > 0.0, "P_t", "must be > 0");
    require(v.sigma2 > 0.0, "sigma2", "must be > 0");
    require(v.zeta > 0.0 && v.zeta <= 1.0, "zeta", "must lie in (0, 1]");
    require(v.beta > 0.0, "beta", "must be > 0");
    require(v.q0 >= 0.0, "q0", "must be >= 0");
    require(v.L > 0.0, "L", "must be > 0");
    require(v.z_p >= 0.0, "z_p", "must be >= 0");
    require(std::isfinite(v.x_u), "x_u", "must be finite");
    require(std::isfinite(v.y_u), "y_u", "must be finite");
    const double k = speed_of_light / (4.0 * std::numbers::pi * v.f_c);
    eta_ = k * k;
    lambda_ = v.P_t / v.sigma2;
    if (!(eta_ > 0.0) || !(lambda_ > 0.0) || !std::isfinite(eta_) ||
        !std::isfinite(lambda_)) {
      throw std::invalid_argument("derived eta/lambda not strictly positive");
    }
  }

  const ParamValues& values() const noexcept { return v_; }

  double f_c() const noexcept { return v_.f_c; }
  double P_t() const noexcept { return v_.P_t; }
  double sigma2() const noexcept { return v_.sigma2; }
  double zeta() const noexcept { return v_.zeta; }
  double beta() const noexcept { return v_.beta; }
  double q0() const noexcept { return v_.q0; }
  double L() const noexcept { return v_.L; }
  double z_p() const noexcept { return v_.z_p; }
  double x_u() const noexcept { return v_.x_u; }
  double y_u() const noexcept { return v_.y_u; }

  double eta() const noexcept { return eta_; }
  double lambda() const noexcept { return lambda_; }

  /// Lateral part of the squared distance, y_u^2 + z_p^2.
  double offset_squared() const noexcept {
    return v_.y_u * v_.y_u + v_.z_p * v_.z_p;
  }

  /// Channel power f(x) needed for the EH constraint to hold with rho = 0.
  double eh_threshold() const noexcept { return v_.q0 / (v_.zeta * v_.P_t); }

 private:
  static void require(bool ok, const char* key, const char* what) {
    if (!ok) {
      throw std::invalid_argument(std::string("invalid parameter '") + key +
                                  "': " + what);
    }
  }

  ParamValues v_;
  double eta_ = 0.0;
  double lambda_ = 0.0;
};

/// Per-position channel statistics.
struct ChannelPoint {
  double x;      // antenna position [m]
  double d2;     // squared antenna-user distance [m^2]
  double p_los;  // Pr(LoS) = exp(-beta d2)
  double f_x;    // mean channel power eta * p_los / d2
};

inline double squared_distance(const SystemParams& p, double x) noexcept {
  const double dx = x - p.x_u();
  return dx * dx + p.offset_squared();
}

inline ChannelPoint channel_point(const SystemParams& p, double x) {
  const double d2 = squared_distance(p, x);
  if (!(d2 > 0.0)) {
    std::ostringstream os;
    os << "degenerate geometry: antenna at x=" << x << " coincides with user";
    throw std::domain_error(os.str());
  }
  const double p_los = std::exp(-p.beta() * d2);
  return {x, d2, p_los, p.eta() * p_los / d2};
}

/// Mean channel power f(x) = eta exp(-beta d^2) / d^2.
inline double mean_channel_power(const SystemParams& p, double x) {
  return channel_point(p, x).f_x;
}

namespace detail {
inline void check_split(double rho) {
  if (!(rho >= 0.0 && rho <= 1.0)) {
    throw std::domain_error("power-splitting ratio must lie in [0, 1], got " +
                            std::to_string(rho));
  }
}
}  // namespace detail

/// Average SNR lambda * rho * f(x).
inline double average_snr(const SystemParams& p, double x, double rho) {
  detail::check_split(rho);
  return p.lambda() * rho * mean_channel_power(p, x);
}

/// Average harvested power zeta (1 - rho) P_t f(x), in watts.
inline double average_harvested_power(const SystemParams& p, double x,
                                      double rho) {
  detail::check_split(rho);
  return p.zeta() * (1.0 - rho) * p.P_t() * mean_channel_power(p, x);
}

inline double dbm_to_watts(double p_dbm) noexcept {
  return std::pow(10.0, (p_dbm - 30.0) / 10.0);
}

inline double watts_to_dbm(double p_w) noexcept {
  return 10.0 * std::log10(p_w) + 30.0;
}

inline double to_db(double linear) noexcept { return 10.0 * std::log10(linear); }

}  // namespace pasw
