#pragma once

#include <string>
#include <string_view>

#include "symns/constitutive.hpp"
#include "symns/initdata.hpp"
#include "symns/stepper.hpp"

namespace symns {

struct GridConfig {
  double a = 1.0;
  double b = 2.0;
  int n = 64;
  int m = 2;
};

struct InitConfig {
  std::string preset = "equilibrium";
  std::string file;  // CSV initial data; takes precedence over preset when set
  double eps = 0.0;
  PresetParams params;
};

struct OutputConfig {
  long snapshot_every = 0;         // steps between snapshots, 0 = off
  double snapshot_interval = 0.0;  // simulated time between snapshots, 0 = off
  std::string out_dir = "out";
  double diag_alpha = 0.5;
  bool write = true;
};

struct SimConfig {
  GridConfig grid;
  GasModel model;
  InitConfig init;
  StepControls controls;
  double t_end = 0.0;
  long max_steps = 10'000'000;
  OutputConfig output;
  std::string base_dir;  // directory relative paths (init.file) are resolved against
  AdmissibilityReport admissibility;

  /// Structural validation; throws ConfigError naming the key path. Also
  /// refreshes `admissibility` (which may fail without throwing).
  void validate();
};

/**
 * Parses the TOML subset used for run configurations:
 *
 *   # comment
 *   controls.t_end = 0.1     # dotted keys, relative to the current section
 *   [grid]
 *   n = 256
 *   [init.params]
 *   amplitude = 0.05
 *
 * Values are numbers, booleans or double-quoted strings. Unknown keys and
 * repeated keys are errors carrying the line number.
 */
SimConfig parse_config(std::string_view text);

/// Reads and parses a file; base_dir becomes the file's directory.
SimConfig load_config(const std::string& path);

/// Applies `key=value` (same value syntax as the file) and re-validates.
void apply_override(SimConfig& cfg, std::string_view assignment);

/// Sets one key from its textual value; throws ConfigError for unknown keys.
void set_config_value(SimConfig& cfg, const std::string& key, std::string_view value, int line = 0);

/// output.out_dir, unless the SYMNS_OUT_DIR environment variable is set. run() itself
/// writes to output.out_dir; callers fold the override in when loading a config.
std::string effective_out_dir(const SimConfig& cfg);

}  // namespace symns
