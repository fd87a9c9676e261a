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
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "pasw/model.hpp"

namespace pasw {

/// SplitMix64 finalizer. Used to derive one independent mt19937_64 seed per
/// trial partition from (seed, partition index).
constexpr std::uint64_t splitmix64(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::mt19937_64 partition_engine(std::uint64_t seed, std::uint64_t partition) {
  return std::mt19937_64(splitmix64(seed ^ splitmix64(partition)));
}

/// Uniform double in [0, 1) from the top 53 bits of one 64-bit draw. Spelled
/// out instead of std::uniform_real_distribution so the stream is identical
/// across standard libraries.
template <class Engine>
double uniform01(Engine& gen) {
  static_assert(Engine::min() == 0 &&
                    Engine::max() == std::numeric_limits<std::uint64_t>::max(),
                "uniform01 needs a full-range 64-bit engine");
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

/// One Bernoulli LoS draw: 1 with probability exp(-beta d^2(x)).
template <class Engine>
int sample_gamma(const SystemParams& p, double x, Engine& gen) {
  const double p_los = std::exp(-p.beta() * squared_distance(p, x));
  return uniform01(gen) < p_los ? 1 : 0;
}

/// Mean / M2 accumulator with Chan's pairwise merge.
class RunningStats {
 public:
  void push(double v) noexcept {
    ++n_;
    const double delta = v - mean_;
    mean_ += delta / static_cast<double>(n_);
    m2_ += delta * (v - mean_);
  }

  void merge(const RunningStats& o) noexcept {
    if (o.n_ == 0) return;
    if (n_ == 0) {
      *this = o;
      return;
    }
    const double n = static_cast<double>(n_ + o.n_);
    const double delta = o.mean_ - mean_;
    mean_ += delta * static_cast<double>(o.n_) / n;
    m2_ += o.m2_ + delta * delta * static_cast<double>(n_) * static_cast<double>(o.n_) / n;
    n_ += o.n_;
  }

  std::uint64_t count() const noexcept { return n_; }
  double mean() const noexcept { return mean_; }

  /// Standard error of the mean; empty for fewer than two samples.
  std::optional<double> standard_error() const noexcept {
    if (n_ < 2) return std::nullopt;
    const double var = m2_ / static_cast<double>(n_ - 1);
    return std::sqrt(var / static_cast<double>(n_));
  }

 private:
  std::uint64_t n_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

struct TrialStats {
  std::uint64_t n_trials = 0;
  double mean_snr = 0.0;
  double mean_eh = 0.0;  // [W]
  std::optional<double> stderr_snr;
  std::optional<double> stderr_eh;
  std::uint64_t seed = 0;
  std::uint64_t los_count = 0;
};

/// Trials per independently seeded partition. Fixed, so results never depend
/// on how partitions are scheduled.
inline constexpr std::uint64_t trials_per_partition = 1ULL << 16;

/// Monte-Carlo estimate of the average SNR and harvested power at (x, rho).
/// Blocked trials contribute exactly zero.
inline TrialStats simulate(const SystemParams& p, double x, double rho,
                           std::uint64_t n_trials, std::uint64_t seed) {
  if (!(rho >= 0.0 && rho <= 1.0)) {
    throw std::domain_error("simulate: rho must lie in [0, 1]");
  }
  if (n_trials < 1) throw std::invalid_argument("simulate: n_trials must be >= 1");

  const ChannelPoint cp = channel_point(p, x);
  const double h_los2 = p.eta() / cp.d2;
  // gamma in {0, 1}, so |gamma h|^2 = gamma |h_los|^2.
  const double snr_los = rho * p.P_t() * h_los2 / p.sigma2();
  const double eh_los = p.zeta() * (1.0 - rho) * p.P_t() * h_los2;

  RunningStats snr_acc;
  RunningStats eh_acc;
  std::uint64_t los = 0;
  const std::uint64_t n_parts = (n_trials + trials_per_partition - 1) / trials_per_partition;
  for (std::uint64_t part = 0; part < n_parts; ++part) {
    auto gen = partition_engine(seed, part);
    const std::uint64_t begin = part * trials_per_partition;
    const std::uint64_t end = std::min(n_trials, begin + trials_per_partition);
    RunningStats snr_part;
    RunningStats eh_part;
    for (std::uint64_t t = begin; t < end; ++t) {
      const int gamma = uniform01(gen) < cp.p_los ? 1 : 0;
      los += static_cast<std::uint64_t>(gamma);
      snr_part.push(gamma * snr_los);
      eh_part.push(gamma * eh_los);
    }
    snr_acc.merge(snr_part);
    eh_acc.merge(eh_part);
  }

  return {n_trials,
          snr_acc.mean(),
          eh_acc.mean(),
          snr_acc.standard_error(),
          eh_acc.standard_error(),
          seed,
          los};
}

}  // namespace pasw
