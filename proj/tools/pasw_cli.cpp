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

// Command-line front end: closed-form solves, parameter sweeps, benchmark
// tables and Monte-Carlo checks, emitting CSV.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pasw/pasw.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_error = 1;
constexpr int exit_infeasible = 2;

struct Overrides {
  std::optional<std::string> config_path;
  std::optional<std::string> out_path;
  std::optional<std::string> dump_path;
  std::optional<std::uint64_t> seed;
  // config key -> raw value from a per-parameter flag
  std::map<std::string, std::string> values;
};

struct AxisFlags {
  std::string var;
  double min = 0.0;
  double max = 0.0;
  std::size_t points = 0;
  bool log = false;

  pasw::SweepAxis axis() const {
    return {pasw::parse_sweep_var(var), min, max, points, log};
  }
};

std::vector<pasw::SchemeId> parse_schemes(const std::string& list) {
  std::vector<pasw::SchemeId> out;
  std::stringstream ss(list);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) out.push_back(pasw::parse_scheme(tok));
  }
  return out;
}

pasw::RunConfig effective_config(const Overrides& o) {
  pasw::RunConfig cfg;
  if (o.config_path) {
    std::ifstream in(*o.config_path);
    if (!in) throw std::runtime_error("cannot open config file '" + *o.config_path + "'");
    pasw::read_config(in, cfg);
  }
  for (const auto& [key, value] : o.values) pasw::set_config_value(cfg, key, value);
  if (o.seed) cfg.seed = *o.seed;
  return cfg;
}

// Writes to --out when given, stdout otherwise.
class Output {
 public:
  explicit Output(const std::optional<std::string>& path) {
    if (path) {
      file_.open(*path, std::ios::binary);
      if (!file_) throw std::runtime_error("cannot open output file '" + *path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }
  bool to_stdout() const { return !file_.is_open(); }

 private:
  std::ofstream file_;
};

void print_solve_summary(std::ostream& os, const pasw::SystemParams& p,
                         const pasw::Solution& sol) {
  const pasw::FeasibilityRegion region = pasw::feasibility_region(p);
  os << "status      " << pasw::to_string(sol.status) << '\n';
  if (sol.point) {
    const auto& op = *sol.point;
    os << "x*          " << pasw::format_double(op.x) << " m\n"
       << "rho*        " << pasw::format_double(op.rho) << '\n'
       << "avg SNR     " << pasw::format_double(op.avg_snr) << " ("
       << pasw::format_double(pasw::to_db(op.avg_snr)) << " dB)\n"
       << "avg EH      " << pasw::format_double(op.avg_eh) << " W\n";
  }
  os << "t_th        " << pasw::format_double(region.t_th) << " m^2\n"
     << "R           " << pasw::format_double(region.radius()) << " m"
     << (region.r_squared < 0 ? " (R^2 < 0)" : "") << '\n';
  if (region.interval) {
    os << "feasible x  [" << pasw::format_double(region.interval->lo) << ", "
       << pasw::format_double(region.interval->hi) << "]\n";
  } else {
    os << "feasible x  empty\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pinching-antenna SWIPT placement and power-splitting optimizer"};
  app.require_subcommand(1);
  app.fallthrough();

  Overrides o;
  app.add_option("--config", o.config_path, "key = value configuration file");
  app.add_option("--out", o.out_path, "output path (default: stdout)");
  app.add_option("--seed", o.seed, "64-bit Monte-Carlo seed");
  app.add_option("--dump-config", o.dump_path, "write the effective configuration here");

  const std::vector<std::pair<std::string, std::string>> param_flags{
      {"--pt-dbm", "P_t_dbm"}, {"--beta", "beta"}, {"--q0", "q0"},
      {"--fc-ghz", "f_c_ghz"}, {"--L", "L"},       {"--zp", "z_p"},
      {"--xu", "x_u"},         {"--yu", "y_u"},    {"--sigma2", "sigma2"},
      {"--zeta", "zeta"}};
  for (const auto& [flag, key] : param_flags) {
    app.add_option_function<std::string>(
        flag, [&o, key = key](const std::string& v) { o.values[key] = v; },
        "override " + key);
  }

  auto* solve_cmd = app.add_subcommand("solve", "closed-form optimum at one operating point");

  auto* sweep_cmd = app.add_subcommand("sweep", "one-variable sweep, CSV output");
  AxisFlags ax1;
  std::string schemes = "proposed,bm0,bm1,bm2,bm3";
  sweep_cmd->add_option("--var", ax1.var, "x|P_t_dbm|beta|q0|x_u|z_p|rho")->required();
  sweep_cmd->add_option("--min", ax1.min)->required();
  sweep_cmd->add_option("--max", ax1.max)->required();
  sweep_cmd->add_option("--points", ax1.points)->required();
  sweep_cmd->add_flag("--log", ax1.log, "logarithmic spacing");
  sweep_cmd->add_option("--schemes", schemes, "comma-separated scheme list");

  auto* grid_cmd = app.add_subcommand("grid2d", "two-variable sweep, CSV output");
  AxisFlags gx1;
  AxisFlags gx2;
  std::string grid_schemes = "proposed";
  grid_cmd->add_option("--var", gx1.var)->required();
  grid_cmd->add_option("--min", gx1.min)->required();
  grid_cmd->add_option("--max", gx1.max)->required();
  grid_cmd->add_option("--points", gx1.points)->required();
  grid_cmd->add_flag("--log", gx1.log);
  grid_cmd->add_option("--var2", gx2.var)->required();
  grid_cmd->add_option("--min2", gx2.min)->required();
  grid_cmd->add_option("--max2", gx2.max)->required();
  grid_cmd->add_option("--points2", gx2.points)->required();
  grid_cmd->add_flag("--log2", gx2.log);
  grid_cmd->add_option("--schemes", grid_schemes);

  auto* mc_cmd = app.add_subcommand("montecarlo", "simulate blockage at the optimum");
  std::uint64_t n_trials = 1'000'000;
  mc_cmd->add_option("--trials", n_trials, "number of trials")->check(CLI::PositiveNumber);

  auto* bench_cmd = app.add_subcommand("bench", "all schemes at one operating point");

  CLI11_PARSE(app, argc, argv);

  try {
    const pasw::RunConfig cfg = effective_config(o);
    if (o.dump_path) {
      std::ofstream dump(*o.dump_path);
      dump << pasw::dump_config(cfg);
    }
    const pasw::SystemParams params = cfg.system();

    if (*solve_cmd) {
      const pasw::Solution sol = pasw::solve(params);
      print_solve_summary(std::cout, params, sol);
      if (o.out_path) {
        Output out(o.out_path);
        out.stream() << pasw::solve_report(params, sol);
      }
      return sol.feasible() ? exit_ok : exit_infeasible;
    }

    if (*sweep_cmd || *grid_cmd) {
      pasw::SweepSpec spec;
      if (*sweep_cmd) {
        spec.first = ax1.axis();
        spec.schemes = parse_schemes(schemes);
      } else {
        spec.first = gx1.axis();
        spec.second = gx2.axis();
        spec.schemes = parse_schemes(grid_schemes);
      }
      const auto rows = pasw::run_sweep(cfg, spec);
      Output out(o.out_path);
      pasw::write_sweep_csv(out.stream(), spec, rows);
      return exit_ok;
    }

    if (*mc_cmd) {
      const pasw::MonteCarloReport rep = pasw::run_montecarlo(cfg, n_trials);
      if (!rep.stats) {
        std::cerr << "infeasible: no operating point meets q0\n";
        return exit_infeasible;
      }
      Output out(o.out_path);
      pasw::write_montecarlo_csv(out.stream(), rep);
      std::ostream& summary = out.to_stdout() ? std::cerr : std::cout;
      const auto z = [](const std::optional<double>& v) {
        return v ? pasw::format_double(*v) : std::string("n/a");
      };
      summary << "trials " << rep.stats->n_trials << ", seed " << rep.stats->seed
              << ", LoS fraction "
              << pasw::format_double(static_cast<double>(rep.stats->los_count) /
                                     static_cast<double>(rep.stats->n_trials))
              << "\nz(avg_snr) " << z(rep.z_snr()) << ", z(avg_eh) " << z(rep.z_eh())
              << '\n';
      return exit_ok;
    }

    if (*bench_cmd) {
      Output out(o.out_path);
      pasw::write_bench_csv(out.stream(), params);
      return exit_ok;
    }
  } catch (const pasw::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_error;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_error;
  }
  return exit_error;
}
