#include "symns/driver.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <thread>

#include "symns/errors.hpp"
#include "symns/io.hpp"

namespace symns {

namespace fs = std::filesystem;

Grid config_grid(const SimConfig& cfg) {
  try {
    return Grid(cfg.grid.a, cfg.grid.b, cfg.grid.n, cfg.grid.m);
  } catch (const DomainError& e) {
    throw ConfigError(std::string("grid: ") + e.what());
  }
}

InitialData build_initial_data(const SimConfig& cfg, const Grid& g) {
  try {
    InitialData d;
    if (!cfg.init.file.empty()) {
      fs::path p(cfg.init.file);
      if (p.is_relative() && !cfg.base_dir.empty()) p = fs::path(cfg.base_dir) / p;
      d = read_initial_data(p.string(), g);
    } else {
      d = preset(cfg.init.preset, g, cfg.init.params);
    }
    if (cfg.init.eps > 0.0) {
      d = approximate_initial_data(g, d, cfg.model, cfg.init.eps, cfg.controls.rho_vac_tol);
    }
    return d;
  } catch (const DomainError& e) {
    throw ConfigError(std::string("init: ") + e.what());
  } catch (const SolverError& e) {
    throw ConfigError(std::string("init: ") + e.what());
  }
}

namespace {

Termination reason_of(FailureKind k) {
  switch (k) {
    case FailureKind::dt_underflow: return Termination::dt_underflow;
    case FailureKind::nan_detected: return Termination::nan_detected;
    case FailureKind::solver_failure: return Termination::solver_failure;
  }
  return Termination::solver_failure;
}

}  // namespace

Trajectory run(const SimConfig& cfg, const RunOptions& opt) {
  if (!opt.force && !cfg.admissibility.passed()) {
    std::string list;
    for (const auto& f : cfg.admissibility.failures()) list += (list.empty() ? "" : ", ") + f;
    throw ConfigError("model is not admissible: " + list);
  }
  const Grid g = config_grid(cfg);
  State s = build_initial_data(cfg, g).to_state(0.0);

  const bool writing = opt.write_output && cfg.output.write;
  fs::path out_dir;
  if (writing) {
    out_dir = cfg.output.out_dir;
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) throw ConfigError("output.out_dir: cannot create '" + out_dir.string() + "'");
  }

  Trajectory traj;
  auto snapshot = [&](const State& st, long step) {
    traj.snapshots.push_back(st);
    traj.snapshot_steps.push_back(step);
    if (writing) write_snapshot((out_dir / snapshot_filename(step)).string(), g, st);
  };

  double clip_mass = 0.0;
  double clip_theta = 0.0;
  traj.series.push_back(make_record(g, s, cfg.model, 0, 0.0, 0.0, 0.0, 0));
  snapshot(s, 0);
  double next_snapshot_time = cfg.output.snapshot_interval;

  long step = 0;
  while (s.t < cfg.t_end) {
    if (step >= cfg.max_steps) {
      traj.reason = Termination::solver_failure;
      traj.message = "step limit " + std::to_string(cfg.max_steps) + " reached at t = " +
                     format_double(s.t);
      break;
    }
    try {
      double dt = opt.fixed_dt > 0.0 ? opt.fixed_dt : cfl_dt(g, s, cfg.model, cfg.controls);
      const double remaining = cfg.t_end - s.t;
      const bool last = dt >= remaining;
      if (last) dt = remaining;
      StepReport rep;
      State next = advance(g, s, dt, cfg.model, cfg.controls, &rep);
      if (last) next.t = cfg.t_end;
      s = std::move(next);
      ++step;
      clip_mass += rep.clip_mass;
      clip_theta += rep.clip_theta;
      traj.series.push_back(
          make_record(g, s, cfg.model, step, dt, clip_mass, clip_theta, rep.picard_iterations));
    } catch (const SolverError& e) {
      traj.reason = reason_of(e.kind());
      traj.message = "step " + std::to_string(step + 1) + ": " + e.what();
      break;
    } catch (const DomainError& e) {
      traj.reason = Termination::solver_failure;
      traj.message = "step " + std::to_string(step + 1) + ": " + e.what();
      break;
    }

    bool take = opt.snapshot_every_step ||
                (cfg.output.snapshot_every > 0 && step % cfg.output.snapshot_every == 0);
    if (cfg.output.snapshot_interval > 0.0 && s.t >= next_snapshot_time) {
      take = true;
      while (next_snapshot_time <= s.t) next_snapshot_time += cfg.output.snapshot_interval;
    }
    if (take && s.t < cfg.t_end) snapshot(s, step);
  }
  traj.steps = step;
  if (traj.snapshot_steps.back() != step) snapshot(s, step);
  if (writing) write_diagnostics((out_dir / "diagnostics.csv").string(), traj);
  return traj;
}

int exit_code(Termination reason) { return reason == Termination::completed ? 0 : 2; }

RunSummary summarize(const SimConfig& cfg, const Trajectory& traj) {
  RunSummary r;
  r.reason = traj.reason;
  r.steps = traj.steps;
  const auto& first = traj.series.front();
  const auto& last = traj.series.back();
  r.t_final = last.t;
  for (const auto& rec : traj.series) {
    r.max_mass_drift = std::max(r.max_mass_drift, std::abs(rec.mass - first.mass) / first.mass);
  }
  r.energy_drift = first.total_energy > 0.0
                       ? std::abs(last.total_energy - first.total_energy) / first.total_energy
                       : std::abs(last.total_energy - first.total_energy);
  r.blowup = blowup_indicator(traj);
  r.clip_mass = last.clip_mass_cumulative;
  const Grid g = config_grid(cfg);
  const double alpha = cfg.output.diag_alpha;
  r.entropy_dissipation = alpha < std::min(1.0, cfg.model.q - cfg.model.r)
                              ? entropy_dissipation(g, traj, cfg.model, alpha)
                              : std::numeric_limits<double>::quiet_NaN();
  const State& fin = traj.snapshots.back();
  r.min_rho = *std::min_element(fin.rho.begin(), fin.rho.end());
  r.min_theta = *std::min_element(fin.theta.begin(), fin.theta.end());
  r.alt = alt_criteria(traj, cfg.controls.rho_vac_tol);
  return r;
}

Field restrict_to_coarse(const Grid& fine, std::span<const double> f) {
  fine.require_cell_field(f, "restrict_to_coarse");
  const auto w = fine.weights();
  Field out(fine.size() / 2);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const std::size_t l = 2 * i, r = 2 * i + 1;
    out[i] = (w[l] * f[l] + w[r] * f[r]) / (w[l] + w[r]);
  }
  return out;
}

double restricted_difference(const Grid& coarse, const State& c, const Grid& fine,
                             const State& f) {
  if (fine.size() != 2 * coarse.size()) {
    throw DomainError("restricted_difference: fine grid must have twice the cells");
  }
  double total = 0.0;
  for (auto member : {&State::rho, &State::u, &State::v, &State::w, &State::theta}) {
    const Field rf = restrict_to_coarse(fine, f.*member);
    Field diff(coarse.size());
    for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = rf[i] - (c.*member)[i];
    const double d = weighted_lp_norm(coarse, diff, 2.0);
    total += d * d;
  }
  return std::sqrt(total);
}

namespace {

void fill_orders(std::vector<ConvergenceRow>& rows) {
  for (std::size_t k = 0; k < rows.size(); ++k) {
    rows[k].order = (k == 0 || !(rows[k].difference > 0.0))
                        ? std::numeric_limits<double>::quiet_NaN()
                        : std::log2(rows[k - 1].difference / rows[k].difference);
  }
}

State final_state(const SimConfig& cfg, double dt) {
  RunOptions opt;
  opt.write_output = false;
  opt.fixed_dt = dt;
  const Trajectory t = run(cfg, opt);
  if (t.reason != Termination::completed) {
    throw SolverError(FailureKind::solver_failure, "convergence level failed: " + t.message);
  }
  return t.snapshots.back();
}

}  // namespace

ConvergenceTable convergence_study(const SimConfig& cfg, int levels) {
  if (levels < 3) throw DomainError("convergence_study: need at least 3 levels");
  if (!(cfg.t_end > 0.0)) throw DomainError("convergence_study: t_end must be > 0");
  ConvergenceTable table;

  // Spatial: one step size, small enough for the finest grid.
  SimConfig finest = cfg;
  finest.grid.n = cfg.grid.n << (levels - 1);
  const Grid gf = config_grid(finest);
  const State sf = build_initial_data(finest, gf).to_state();
  const double dt_space = cfl_dt(gf, sf, cfg.model, cfg.controls);
  {
    std::vector<Grid> grids;
    std::vector<State> states;
    for (int l = 0; l < levels; ++l) {
      SimConfig c = cfg;
      c.grid.n = cfg.grid.n << l;
      grids.push_back(config_grid(c));
      states.push_back(final_state(c, dt_space));
    }
    for (int l = 0; l + 1 < levels; ++l) {
      table.spatial.push_back(
          {grids[l].n(), dt_space,
           restricted_difference(grids[l], states[l], grids[l + 1], states[l + 1]), 0.0});
    }
    fill_orders(table.spatial);
  }

  // Temporal: base grid, CFL step halved per level.
  {
    const Grid g = config_grid(cfg);
    const State s0 = build_initial_data(cfg, g).to_state();
    const double dt0 = cfl_dt(g, s0, cfg.model, cfg.controls);
    std::vector<State> states;
    for (int l = 0; l < levels; ++l) states.push_back(final_state(cfg, dt0 / std::ldexp(1.0, l)));
    for (int l = 0; l + 1 < levels; ++l) {
      double total = 0.0;
      for (auto member : {&State::rho, &State::u, &State::v, &State::w, &State::theta}) {
        Field diff(g.size());
        for (std::size_t i = 0; i < diff.size(); ++i) {
          diff[i] = (states[l + 1].*member)[i] - (states[l].*member)[i];
        }
        const double d = weighted_lp_norm(g, diff, 2.0);
        total += d * d;
      }
      table.temporal.push_back({g.n(), dt0 / std::ldexp(1.0, l), std::sqrt(total), 0.0});
    }
    fill_orders(table.temporal);
  }
  table.spatial_order = table.spatial.back().order;
  table.temporal_order = table.temporal.back().order;
  return table;
}

std::vector<SweepRow> sweep(const SimConfig& cfg, const std::string& key,
                            const std::vector<std::string>& values, unsigned workers) {
  std::vector<SweepRow> rows(values.size());
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, std::max<std::size_t>(values.size(), 1));
  const fs::path base = cfg.output.out_dir;
  std::atomic<std::size_t> next{0};

  auto work = [&]() {
    for (std::size_t k = next++; k < values.size(); k = next++) {
      SweepRow& row = rows[k];
      row.value = values[k];
      try {
        SimConfig c = cfg;
        apply_override(c, key + "=" + values[k]);
        c.output.out_dir = (base / (key + "=" + values[k])).string();
        const Trajectory t = run(c);
        row.summary = summarize(c, t);
        row.status = to_string(t.reason);
        row.exit_code = exit_code(t.reason);
        row.message = t.message;
      } catch (const ConfigError& e) {
        row.status = "config_error";
        row.exit_code = 3;
        row.message = e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  return rows;
}

}  // namespace symns
