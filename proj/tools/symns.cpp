// Command-line front end: run, verify, sweep, convergence.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>

#include "symns/config.hpp"
#include "symns/diagnostics.hpp"
#include "symns/driver.hpp"
#include "symns/errors.hpp"
#include "symns/initdata.hpp"
#include "symns/io.hpp"

namespace {

using namespace symns;

constexpr int kExitConfig = 3;

SimConfig load(const std::string& path) {
  SimConfig cfg = load_config(path);
  cfg.output.out_dir = effective_out_dir(cfg);
  return cfg;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6e", v);
  return buf;
}

double max_abs_defined(const Field& f) {
  double m = 0.0;
  for (double v : f) {
    if (!std::isnan(v)) m = std::max(m, std::abs(v));
  }
  return m;
}

int cmd_run(const std::string& path, bool force, bool quiet) {
  const SimConfig cfg = load(path);
  RunOptions opt;
  opt.force = force;
  if (force && !cfg.admissibility.passed()) {
    std::cerr << "warning: running an inadmissible model\n" << cfg.admissibility.to_string();
  }
  const Trajectory traj = run(cfg, opt);
  const RunSummary s = summarize(cfg, traj);
  if (!quiet) {
    std::cout << "reason           " << to_string(s.reason) << '\n'
              << "steps            " << s.steps << '\n'
              << "t_final          " << num(s.t_final) << '\n'
              << "mass_drift       " << num(s.max_mass_drift) << '\n'
              << "energy_drift     " << num(s.energy_drift) << '\n'
              << "blowup_indicator " << num(s.blowup) << '\n'
              << "entropy_dissip   " << num(s.entropy_dissipation) << '\n'
              << "clip_mass        " << num(s.clip_mass) << '\n'
              << "min_rho          " << num(s.min_rho) << '\n'
              << "min_theta        " << num(s.min_theta) << '\n';
    if (cfg.output.write) std::cout << "output           " << cfg.output.out_dir << '\n';
  }
  if (s.reason != Termination::completed) std::cerr << "error: " << traj.message << '\n';
  return exit_code(s.reason);
}

int cmd_verify(const std::string& path) {
  const SimConfig cfg = load(path);
  std::cout << cfg.admissibility.to_string();
  bool ok = cfg.admissibility.passed();
  try {
    const Grid g = config_grid(cfg);
    const InitialData d = build_initial_data(cfg, g);
    const CompatibilityResiduals r = compatibility_residuals(g, d, cfg.model, cfg.controls.rho_vac_tol);
    std::cout << "initial data     " << d.provenance << '\n'
              << "max|g1|          " << num(max_abs_defined(r.g1)) << '\n'
              << "max|g2|          " << num(max_abs_defined(r.g2)) << '\n'
              << "max|g3|          " << num(max_abs_defined(r.g3)) << '\n'
              << "max|g4|          " << num(max_abs_defined(r.g4)) << '\n'
              << "vacuum cells     " << r.vacuum.size() << '\n';
    if (!r.vacuum.empty()) {
      double e[4] = {0, 0, 0, 0};
      for (const auto& v : r.vacuum) {
        e[0] = std::max(e[0], std::abs(v.r1));
        e[1] = std::max(e[1], std::abs(v.r2));
        e[2] = std::max(e[2], std::abs(v.r3));
        e[3] = std::max(e[3], std::abs(v.r4));
      }
      std::cout << "vacuum max|raw|  " << num(e[0]) << ' ' << num(e[1]) << ' ' << num(e[2]) << ' '
                << num(e[3]) << '\n';
    }
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    ok = false;
  }
  std::cout << (ok ? "verify: OK\n" : "verify: FAILED\n");
  return ok ? 0 : 1;
}

std::vector<std::string> split_values(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int cmd_sweep(const std::string& path, const std::string& vary, unsigned jobs) {
  const SimConfig cfg = load(path);
  const auto eq = vary.find('=');
  if (eq == std::string::npos) throw ConfigError("--vary expects key=v1,v2,...");
  const std::string key = vary.substr(0, eq);
  const auto values = split_values(vary.substr(eq + 1));
  if (values.empty()) throw ConfigError("--vary lists no values");
  const auto rows = sweep(cfg, key, values, jobs);
  std::cout << key << ",status,steps,t_final,mass_drift,energy_drift,blowup_indicator,message\n";
  int worst = 0;
  for (const auto& r : rows) {
    std::cout << r.value << ',' << r.status << ',' << r.summary.steps << ','
              << num(r.summary.t_final) << ',' << num(r.summary.max_mass_drift) << ','
              << num(r.summary.energy_drift) << ',' << num(r.summary.blowup) << ",\"" << r.message
              << "\"\n";
    worst = std::max(worst, r.exit_code);
  }
  return worst;
}

int cmd_convergence(const std::string& path, int levels) {
  SimConfig cfg = load(path);
  cfg.output.write = false;
  const ConvergenceTable t = convergence_study(cfg, levels);
  std::cout << "spatial (dt fixed)\n n,dt,difference,order\n";
  for (const auto& r : t.spatial) {
    std::cout << ' ' << r.n << ',' << num(r.dt) << ',' << num(r.difference) << ',' << num(r.order)
              << '\n';
  }
  std::cout << "temporal (n fixed)\n n,dt,difference,order\n";
  for (const auto& r : t.temporal) {
    std::cout << ' ' << r.n << ',' << num(r.dt) << ',' << num(r.difference) << ',' << num(r.order)
              << '\n';
  }
  std::cout << "spatial_order  " << num(t.spatial_order) << '\n'
            << "temporal_order " << num(t.temporal_order) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symmetric compressible Navier-Stokes solver on an annulus"};
  app.require_subcommand(1);

  std::string config;
  bool force = false;
  bool quiet = false;
  auto* run_cmd = app.add_subcommand("run", "integrate a configuration to t_end");
  run_cmd->add_option("config", config, "run configuration file")->required();
  run_cmd->add_flag("--force", force, "run even if the model fails the admissibility check");
  run_cmd->add_flag("-q,--quiet", quiet, "suppress the summary");

  auto* verify_cmd = app.add_subcommand("verify", "admissibility and compatibility report");
  verify_cmd->add_option("config", config, "run configuration file")->required();

  std::string vary;
  unsigned jobs = 0;
  auto* sweep_cmd = app.add_subcommand("sweep", "independent runs over one parameter");
  sweep_cmd->add_option("config", config, "run configuration file")->required();
  sweep_cmd->add_option("--vary", vary, "key=v1,v2,...")->required();
  sweep_cmd->add_option("-j,--jobs", jobs, "worker threads (0 = hardware concurrency)");

  int levels = 3;
  auto* conv_cmd = app.add_subcommand("convergence", "self-convergence study");
  conv_cmd->add_option("config", config, "run configuration file")->required();
  conv_cmd->add_option("--levels", levels, "number of refinement levels")
      ->check(CLI::Range(3, 12));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitConfig;
  }

  try {
    if (*run_cmd) return cmd_run(config, force, quiet);
    if (*verify_cmd) return cmd_verify(config);
    if (*sweep_cmd) return cmd_sweep(config, vary, jobs);
    if (*conv_cmd) return cmd_convergence(config, levels);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const SolverError& e) {
    std::cerr << "solver error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  }
  return 0;
}
