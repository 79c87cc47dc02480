#pragma once

#include <ostream>
#include <string>

#include "symns/diagnostics.hpp"
#include "symns/grid.hpp"
#include "symns/initdata.hpp"
#include "symns/stepper.hpp"

namespace symns {

/// "snapshot_000042.csv"
std::string snapshot_filename(long step);

/// CSV with header x,rho,u,v,w,theta and 17 significant digits per number.
void write_snapshot(std::ostream& out, const Grid& g, const State& s);
void write_snapshot(const std::string& path, const Grid& g, const State& s);

/// Loads initial data from CSV. Accepts the snapshot header (x,rho,u,v,w,theta)
/// or x,rho0,u0,v0,w0,theta0. The x column must match the grid centres to within
/// 1e-12 dx; no interpolation is performed.
InitialData read_initial_data(const std::string& path, const Grid& g);

void write_diagnostics_header(std::ostream& out);
void write_diagnostics_row(std::ostream& out, const DiagnosticsRecord& r);
void write_diagnostics(const std::string& path, const Trajectory& traj);

/// %.16e in the C locale.
std::string format_double(double v);

}  // namespace symns
