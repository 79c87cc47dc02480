#include "symns/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "symns/errors.hpp"

namespace symns {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

std::string snapshot_filename(long step) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "snapshot_%06ld.csv", step);
  return buf;
}

void write_snapshot(std::ostream& out, const Grid& g, const State& s) {
  s.validate(g);
  out << "x,rho,u,v,w,theta\n";
  for (std::size_t i = 0; i < g.size(); ++i) {
    out << format_double(g.x(i)) << ',' << format_double(s.rho[i]) << ','
        << format_double(s.u[i]) << ',' << format_double(s.v[i]) << ','
        << format_double(s.w[i]) << ',' << format_double(s.theta[i]) << '\n';
  }
}

void write_snapshot(const std::string& path, const Grid& g, const State& s) {
  std::ofstream f(path);
  if (!f) throw DomainError("cannot write snapshot '" + path + "'");
  write_snapshot(f, g, s);
  if (!f) throw DomainError("write failed for '" + path + "'");
}

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) {
    while (!cell.empty() && (cell.back() == '\r' || cell.back() == ' ')) cell.pop_back();
    while (!cell.empty() && cell.front() == ' ') cell.erase(cell.begin());
    out.push_back(cell);
  }
  return out;
}

}  // namespace

InitialData read_initial_data(const std::string& path, const Grid& g) {
  std::ifstream f(path);
  if (!f) throw DomainError("cannot open initial data '" + path + "'");
  std::string line;
  if (!std::getline(f, line)) throw DomainError(path + ": empty file");
  const auto header = split(line);
  const std::vector<std::string> plain{"x", "rho", "u", "v", "w", "theta"};
  const std::vector<std::string> zeroed{"x", "rho0", "u0", "v0", "w0", "theta0"};
  if (header != plain && header != zeroed) {
    throw DomainError(path + ": header must be x,rho,u,v,w,theta or x,rho0,u0,v0,w0,theta0");
  }

  InitialData d;
  d.provenance = path;
  std::size_t row = 0;
  const auto x = g.centers();
  while (std::getline(f, line)) {
    if (line.empty() || line == "\r") continue;
    const auto cells = split(line);
    if (cells.size() != 6) {
      throw DomainError(path + ": row " + std::to_string(row + 1) + " needs 6 columns");
    }
    double v[6];
    for (int k = 0; k < 6; ++k) {
      char* end = nullptr;
      v[k] = std::strtod(cells[k].c_str(), &end);
      if (end == cells[k].c_str() || *end != '\0') {
        throw DomainError(path + ": row " + std::to_string(row + 1) + ": bad number '" +
                          cells[k] + "'");
      }
    }
    if (row >= g.size()) throw DomainError(path + ": more rows than grid cells");
    if (std::abs(v[0] - x[row]) > 1e-12 * g.dx()) {
      throw DomainError(path + ": row " + std::to_string(row + 1) + ": x = " + cells[0] +
                        " does not match grid centre " + format_double(x[row]));
    }
    d.rho0.push_back(v[1]);
    d.u0.push_back(v[2]);
    d.v0.push_back(v[3]);
    d.w0.push_back(v[4]);
    d.theta0.push_back(v[5]);
    ++row;
  }
  if (row != g.size()) {
    throw DomainError(path + ": " + std::to_string(row) + " rows for " +
                      std::to_string(g.size()) + " grid cells");
  }
  d.validate(g);
  return d;
}

void write_diagnostics_header(std::ostream& out) {
  out << "step,t,dt,mass,total_energy,kinetic_energy,max_rho,min_rho,max_theta,max_abs_u,"
         "grad_u_max,rho_theta_norm_12_5,G_max,clip_mass_cumulative,clip_theta,"
         "picard_iterations\n";
}

void write_diagnostics_row(std::ostream& out, const DiagnosticsRecord& r) {
  out << r.step;
  for (double v : {r.t, r.dt, r.mass, r.total_energy, r.kinetic_energy, r.max_rho, r.min_rho,
                   r.max_theta, r.max_abs_u, r.grad_u_max, r.rho_theta_norm_12_5, r.G_max,
                   r.clip_mass_cumulative, r.clip_theta}) {
    out << ',' << format_double(v);
  }
  out << ',' << r.picard_iterations << '\n';
}

void write_diagnostics(const std::string& path, const Trajectory& traj) {
  std::ofstream f(path);
  if (!f) throw DomainError("cannot write diagnostics '" + path + "'");
  write_diagnostics_header(f);
  for (const auto& r : traj.series) write_diagnostics_row(f, r);
}

}  // namespace symns
