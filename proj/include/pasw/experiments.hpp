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

#include <charconv>
#include <cmath>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "pasw/benchmarks.hpp"
#include "pasw/model.hpp"
#include "pasw/montecarlo.hpp"
#include "pasw/optimizer.hpp"

namespace pasw {

// ---------------------------------------------------------------------------
// Number formatting

/// Shortest decimal string that parses back to exactly `v`.
inline std::string format_double(double v) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc{}) throw std::runtime_error("format_double: to_chars failed");
  return std::string(buf, end);
}

inline std::optional<double> parse_double(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

// ---------------------------------------------------------------------------
// Run configuration

class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string key, const std::string& what)
      : std::runtime_error("config key '" + key + "': " + what), key_(std::move(key)) {}
  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

struct RunConfig {
  ParamValues params;  // defaults match the reference scenario
  std::uint64_t seed = 1;

  SystemParams system() const { return SystemParams(params); }
};

/// Sets one configuration key. Field names are SI (f_c in Hz, P_t in W);
/// `P_t_dbm` and `f_c_ghz` are accepted as unit-converting aliases.
inline void set_config_value(RunConfig& cfg, std::string_view key, std::string_view value) {
  const std::string k(key);
  while (!value.empty() && (value.front() == ' ' || value.front() == '\t')) value.remove_prefix(1);
  while (!value.empty() && (value.back() == ' ' || value.back() == '\t' || value.back() == '\r')) {
    value.remove_suffix(1);
  }
  if (k == "seed") {
    std::uint64_t s = 0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), s);
    if (ec != std::errc{} || ptr != value.data() + value.size()) {
      throw ConfigError(k, "expected an unsigned 64-bit integer, got '" + std::string(value) + "'");
    }
    cfg.seed = s;
    return;
  }
  const std::optional<double> v = parse_double(value);
  if (!v || !std::isfinite(*v)) {
    throw ConfigError(k, "expected a finite number, got '" + std::string(value) + "'");
  }
  ParamValues& p = cfg.params;
  if (k == "f_c") p.f_c = *v;
  else if (k == "f_c_ghz") p.f_c = *v * 1e9;
  else if (k == "P_t") p.P_t = *v;
  else if (k == "P_t_dbm") p.P_t = dbm_to_watts(*v);
  else if (k == "sigma2") p.sigma2 = *v;
  else if (k == "zeta") p.zeta = *v;
  else if (k == "beta") p.beta = *v;
  else if (k == "q0") p.q0 = *v;
  else if (k == "L") p.L = *v;
  else if (k == "z_p") p.z_p = *v;
  else if (k == "x_u") p.x_u = *v;
  else if (k == "y_u") p.y_u = *v;
  else throw ConfigError(k, "unknown key");
}

/// Reads `key = value` lines; blank lines and '#' comments are skipped.
inline void read_config(std::istream& in, RunConfig& cfg) {
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(line.substr(first), "line " + std::to_string(line_no) +
                                                ": expected key = value");
    }
    std::string key = line.substr(0, eq);
    key.erase(0, key.find_first_not_of(" \t"));
    key.erase(key.find_last_not_of(" \t") + 1);
    set_config_value(cfg, key, std::string_view(line).substr(eq + 1));
  }
}

/// Effective configuration in the format `read_config` accepts.
inline std::string dump_config(const RunConfig& cfg) {
  const ParamValues& p = cfg.params;
  std::ostringstream os;
  os << "f_c = " << format_double(p.f_c) << '\n'
     << "P_t = " << format_double(p.P_t) << '\n'
     << "sigma2 = " << format_double(p.sigma2) << '\n'
     << "zeta = " << format_double(p.zeta) << '\n'
     << "beta = " << format_double(p.beta) << '\n'
     << "q0 = " << format_double(p.q0) << '\n'
     << "L = " << format_double(p.L) << '\n'
     << "z_p = " << format_double(p.z_p) << '\n'
     << "x_u = " << format_double(p.x_u) << '\n'
     << "y_u = " << format_double(p.y_u) << '\n'
     << "seed = " << cfg.seed << '\n';
  return os.str();
}

// ---------------------------------------------------------------------------
// Sweeps

enum class SweepVar { X, PtDbm, Beta, Q0, Xu, Zp, Rho };

constexpr std::string_view to_string(SweepVar v) noexcept {
  switch (v) {
    case SweepVar::X: return "x";
    case SweepVar::PtDbm: return "P_t_dbm";
    case SweepVar::Beta: return "beta";
    case SweepVar::Q0: return "q0";
    case SweepVar::Xu: return "x_u";
    case SweepVar::Zp: return "z_p";
    case SweepVar::Rho: return "rho";
  }
  return "unknown";
}

inline SweepVar parse_sweep_var(std::string_view s) {
  for (SweepVar v : {SweepVar::X, SweepVar::PtDbm, SweepVar::Beta, SweepVar::Q0,
                     SweepVar::Xu, SweepVar::Zp, SweepVar::Rho}) {
    if (to_string(v) == s) return v;
  }
  throw std::invalid_argument("unknown sweep variable '" + std::string(s) +
                              "' (expected x|P_t_dbm|beta|q0|x_u|z_p|rho)");
}

struct SweepAxis {
  SweepVar var = SweepVar::X;
  double min = 0.0;
  double max = 0.0;
  std::size_t points = 1;
  bool log = false;

  void validate() const {
    if (!std::isfinite(min) || !std::isfinite(max)) {
      throw std::invalid_argument("sweep range must be finite");
    }
    if (points < 1) throw std::invalid_argument("sweep needs at least one point");
    if (min > max) throw std::invalid_argument("sweep range is empty (min > max)");
    if (log && !(min > 0.0)) {
      throw std::invalid_argument("log spacing requires positive endpoints");
    }
  }

  /// Grid values; both endpoints are reproduced exactly.
  std::vector<double> values() const {
    validate();
    std::vector<double> out(points);
    if (points == 1) {
      out[0] = min;
      return out;
    }
    const double n = static_cast<double>(points - 1);
    for (std::size_t i = 0; i < points; ++i) {
      const double t = static_cast<double>(i) / n;
      out[i] = log ? std::exp(std::log(min) + t * (std::log(max) - std::log(min)))
                   : min + t * (max - min);
    }
    out.front() = min;
    out.back() = max;
    return out;
  }
};

struct SweepSpec {
  SweepAxis first;
  std::optional<SweepAxis> second;
  std::vector<SchemeId> schemes{all_schemes.begin(), all_schemes.end()};

  void validate() const {
    first.validate();
    if (second) {
      second->validate();
      if (second->var == first.var) {
        throw std::invalid_argument("two-variable sweep needs distinct variables");
      }
    }
    if (schemes.empty()) throw std::invalid_argument("sweep needs at least one scheme");
  }
};

struct SweepRow {
  double value = 0.0;
  std::optional<double> value2;
  SchemeId scheme = SchemeId::Proposed;
  Solution solution;
};

namespace detail {
inline void apply_sweep_value(ParamValues& p, Pinned& pin, SweepVar var, double v) {
  switch (var) {
    case SweepVar::X: pin.x = v; break;
    case SweepVar::Rho: pin.rho = v; break;
    case SweepVar::PtDbm: p.P_t = dbm_to_watts(v); break;
    case SweepVar::Beta: p.beta = v; break;
    case SweepVar::Q0: p.q0 = v; break;
    case SweepVar::Xu: p.x_u = v; break;
    case SweepVar::Zp: p.z_p = v; break;
  }
}
}  // namespace detail

/// Evaluates every scheme at every grid point. Rows come out in sweep order:
/// first variable outermost, then second variable, then scheme.
inline std::vector<SweepRow> run_sweep(const RunConfig& cfg, const SweepSpec& spec) {
  spec.validate();
  const std::vector<double> v1 = spec.first.values();
  const std::vector<double> v2 =
      spec.second ? spec.second->values() : std::vector<double>{0.0};

  std::vector<SweepRow> rows;
  rows.reserve(v1.size() * v2.size() * spec.schemes.size());
  for (double a : v1) {
    for (double b : v2) {
      ParamValues values = cfg.params;
      Pinned pin;
      detail::apply_sweep_value(values, pin, spec.first.var, a);
      if (spec.second) detail::apply_sweep_value(values, pin, spec.second->var, b);
      const SystemParams params(values);
      if (pin.x && !(*pin.x >= 0.0 && *pin.x <= params.L())) {
        throw std::invalid_argument("swept x=" + format_double(*pin.x) +
                                    " lies outside [0, L]");
      }
      if (pin.rho && !(*pin.rho >= 0.0 && *pin.rho <= 1.0)) {
        throw std::invalid_argument("swept rho=" + format_double(*pin.rho) +
                                    " lies outside [0, 1]");
      }
      for (SchemeId s : spec.schemes) {
        SweepRow row{a, std::nullopt, s, evaluate_scheme(params, s, pin)};
        if (spec.second) row.value2 = b;
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

// ---------------------------------------------------------------------------
// CSV output

inline std::string_view status_token(const Solution& s) noexcept {
  return s.eh_violation ? std::string_view("eh_violation") : to_string(s.status);
}

/// status,x,rho,avg_snr,avg_snr_db,avg_eh; metric cells empty when infeasible.
inline void write_solution_cells(std::ostream& os, const Solution& s) {
  os << status_token(s);
  if (!s.point) {
    os << ",,,,,";
    return;
  }
  const OperatingPoint& op = *s.point;
  os << ',' << format_double(op.x) << ',' << format_double(op.rho) << ','
     << format_double(op.avg_snr) << ',' << format_double(to_db(op.avg_snr)) << ','
     << format_double(op.avg_eh);
}

inline constexpr std::string_view metric_columns = "status,x,rho,avg_snr,avg_snr_db,avg_eh";

inline std::string sweep_csv_header(const SweepSpec& spec) {
  std::string h(to_string(spec.first.var));
  if (spec.second) (h += ',') += to_string(spec.second->var);
  h += ",scheme,";
  h += metric_columns;
  return h;
}

inline void write_sweep_csv(std::ostream& os, const SweepSpec& spec,
                            const std::vector<SweepRow>& rows) {
  os << sweep_csv_header(spec) << '\n';
  for (const SweepRow& r : rows) {
    os << format_double(r.value) << ',';
    if (r.value2) os << format_double(*r.value2) << ',';
    os << to_string(r.scheme) << ',';
    write_solution_cells(os, r.solution);
    os << '\n';
  }
}

inline void write_bench_csv(std::ostream& os, const SystemParams& p) {
  os << "scheme," << metric_columns << '\n';
  for (SchemeId s : all_schemes) {
    os << to_string(s) << ',';
    write_solution_cells(os, evaluate_scheme(p, s));
    os << '\n';
  }
}

// ---------------------------------------------------------------------------
// Monte-Carlo report

struct MonteCarloReport {
  Solution solution;
  std::optional<TrialStats> stats;  // empty when the scenario is infeasible
  double analytic_snr = 0.0;
  double analytic_eh = 0.0;

  /// (empirical - analytic) / stderr, empty when the stderr is missing or 0.
  static std::optional<double> z_score(double empirical, double analytic,
                                       const std::optional<double>& se) {
    if (!se || *se == 0.0) return std::nullopt;
    return (empirical - analytic) / *se;
  }
  std::optional<double> z_snr() const {
    return z_score(stats->mean_snr, analytic_snr, stats->stderr_snr);
  }
  std::optional<double> z_eh() const {
    return z_score(stats->mean_eh, analytic_eh, stats->stderr_eh);
  }
};

/// Solves, then simulates the blockage process at the optimal operating point.
inline MonteCarloReport run_montecarlo(const RunConfig& cfg, std::uint64_t n_trials) {
  const SystemParams p = cfg.system();
  MonteCarloReport rep;
  rep.solution = solve(p);
  if (!rep.solution.point) return rep;
  const OperatingPoint& op = *rep.solution.point;
  rep.analytic_snr = op.avg_snr;
  rep.analytic_eh = op.avg_eh;
  rep.stats = simulate(p, op.x, op.rho, n_trials, cfg.seed);
  return rep;
}

inline void write_montecarlo_csv(std::ostream& os, const MonteCarloReport& rep) {
  const auto opt = [](const std::optional<double>& v) {
    return v ? format_double(*v) : std::string();
  };
  os << "metric,analytic,empirical,stderr,z_score,n_trials,seed\n";
  if (!rep.stats) return;
  const TrialStats& s = *rep.stats;
  os << "avg_snr," << format_double(rep.analytic_snr) << ',' << format_double(s.mean_snr)
     << ',' << opt(s.stderr_snr) << ',' << opt(rep.z_snr()) << ',' << s.n_trials << ','
     << s.seed << '\n';
  os << "avg_eh," << format_double(rep.analytic_eh) << ',' << format_double(s.mean_eh)
     << ',' << opt(s.stderr_eh) << ',' << opt(rep.z_eh()) << ',' << s.n_trials << ','
     << s.seed << '\n';
}

// ---------------------------------------------------------------------------
// Solve report

/// Machine-readable `key=value` summary of a closed-form solve.
inline std::string solve_report(const SystemParams& p, const Solution& sol) {
  const FeasibilityRegion region = feasibility_region(p);
  std::ostringstream os;
  os << "status=" << to_string(sol.status) << '\n';
  if (sol.point) {
    const OperatingPoint& op = *sol.point;
    os << "x_star=" << format_double(op.x) << '\n'
       << "rho_star=" << format_double(op.rho) << '\n'
       << "avg_snr=" << format_double(op.avg_snr) << '\n'
       << "avg_snr_db=" << format_double(to_db(op.avg_snr)) << '\n'
       << "avg_eh=" << format_double(op.avg_eh) << '\n';
  }
  os << "t_th=" << format_double(region.t_th) << '\n'
     << "r_squared=" << format_double(region.r_squared) << '\n'
     << "R=" << format_double(region.radius()) << '\n';
  if (region.interval) {
    os << "interval_lo=" << format_double(region.interval->lo) << '\n'
       << "interval_hi=" << format_double(region.interval->hi) << '\n';
  } else {
    os << "interval=empty\n";
  }
  return os.str();
}

}  // namespace pasw
