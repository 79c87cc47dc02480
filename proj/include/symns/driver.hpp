#pragma once

#include <string>
#include <vector>

#include "symns/config.hpp"
#include "symns/diagnostics.hpp"
#include "symns/grid.hpp"
#include "symns/initdata.hpp"

namespace symns {

struct RunOptions {
  bool force = false;                // run even if the model is not admissible
  bool write_output = true;          // honoured only when output.write is also true
  double fixed_dt = 0.0;             // > 0: constant step instead of the CFL step
  bool snapshot_every_step = false;  // keep every state in Trajectory::snapshots
};

Grid config_grid(const SimConfig& cfg);

/// Preset or CSV file, followed by the eps-construction when init.eps > 0.
/// Throws ConfigError on invalid data.
InitialData build_initial_data(const SimConfig& cfg, const Grid& g);

/**
 * Integrates from t = 0 to controls.t_end. Solver failures become termination
 * reasons; configuration problems (inadmissible model without `force`, bad
 * initial data, unwritable output) throw ConfigError. The initial and final
 * states are always snapshotted.
 */
Trajectory run(const SimConfig& cfg, const RunOptions& opt = {});

/// 0 for completed, 2 for every solver termination.
int exit_code(Termination reason);

struct RunSummary {
  Termination reason = Termination::completed;
  long steps = 0;
  double t_final = 0.0;
  double max_mass_drift = 0.0;   // max_k |M_k - M_0| / M_0
  double energy_drift = 0.0;     // |E_end - E_0| / E_0
  double blowup = 0.0;
  double entropy_dissipation = 0.0;  // NaN when diag_alpha is outside (0, min(1, q - r))
  double clip_mass = 0.0;
  double min_rho = 0.0;
  double min_theta = 0.0;
  AltCriteria alt;
};

RunSummary summarize(const SimConfig& cfg, const Trajectory& traj);

/// Weighted L2 norm of (rho, u, v, w, theta) differences after restricting the
/// fine state (2n cells) onto the coarse grid by weighted averaging.
double restricted_difference(const Grid& coarse, const State& c, const Grid& fine, const State& f);

/// Weighted average of cell pairs onto the grid with half as many cells.
Field restrict_to_coarse(const Grid& fine, std::span<const double> f);

struct ConvergenceRow {
  int n = 0;
  double dt = 0.0;
  double difference = 0.0;  // distance to the next finer level
  double order = 0.0;       // log2 of successive difference ratios, NaN for the first row
};

struct ConvergenceTable {
  std::vector<ConvergenceRow> spatial;   // dt fixed, n doubled
  std::vector<ConvergenceRow> temporal;  // n fixed, dt halved
  double spatial_order = 0.0;            // finest observed order
  double temporal_order = 0.0;
};

/// Self-convergence study with `levels` >= 3 runs per table.
ConvergenceTable convergence_study(const SimConfig& cfg, int levels);

struct SweepRow {
  std::string value;
  std::string status;  // termination reason or "config_error"
  int exit_code = 0;
  RunSummary summary;
  std::string message;
};

/// Independent runs of cfg with `key` set to each value, on up to `workers`
/// threads. Each run writes to <out_dir>/<key>=<value>.
std::vector<SweepRow> sweep(const SimConfig& cfg, const std::string& key,
                            const std::vector<std::string>& values, unsigned workers = 0);

}  // namespace symns
