#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "symns/constitutive.hpp"
#include "symns/grid.hpp"
#include "symns/stepper.hpp"

namespace symns {

enum class Termination { completed, dt_underflow, solver_failure, nan_detected };

const char* to_string(Termination t);

/// One row of the per-step time series. Step 0 describes the initial state
/// (dt = 0).
struct DiagnosticsRecord {
  long step = 0;
  double t = 0.0;
  double dt = 0.0;
  double mass = 0.0;
  double total_energy = 0.0;
  double kinetic_energy = 0.0;
  double max_rho = 0.0;
  double min_rho = 0.0;
  double max_theta = 0.0;
  double max_abs_u = 0.0;
  double grad_u_max = 0.0;
  double rho_theta_norm_12_5 = 0.0;  // NaN unless m is 1 or 2
  double G_max = 0.0;
  double clip_mass_cumulative = 0.0;
  double clip_theta = 0.0;
  int picard_iterations = 0;
};

struct Trajectory {
  std::vector<State> snapshots;
  std::vector<long> snapshot_steps;
  std::vector<DiagnosticsRecord> series;
  Termination reason = Termination::completed;
  std::string message;
  long steps = 0;
};

double mass(const Grid& g, const State& s);
double kinetic_energy(const Grid& g, const State& s);
/// int x^m rho (e + (u^2 + v^2 + w^2) / 2).
double total_energy(const Grid& g, const State& s, const GasModel& model);

/// max_i max(|u_x|, m|u|/x, |v_x|, m|v|/x, |w_x|).
double symmetric_gradient_max(const Grid& g, const State& s);

DiagnosticsRecord make_record(const Grid& g, const State& s, const GasModel& model, long step,
                              double dt, double clip_mass_cumulative, double clip_theta,
                              int picard_iterations);

/// Spatial integrand int x^m (1 + theta^q) theta_x^2 / theta^{1+alpha} at one instant,
/// evaluated on interior faces with theta floored at 1e-30.
double entropy_dissipation_rate(const Grid& g, std::span<const double> theta,
                                const GasModel& model, double alpha);

/// Trapezoid in time of entropy_dissipation_rate over the trajectory snapshots.
/// Throws DomainError unless 0 < alpha < min(1, q - r).
double entropy_dissipation(const Grid& g, const Trajectory& traj, const GasModel& model,
                           double alpha);

/// Trapezoid in time of (max theta)^p over the diagnostics series.
double sup_theta_time_integral(const Trajectory& traj, double p);

/// Running value sup_{s<=t} max rho + int_0^t ||rho theta||_{12/5}^4 ds, one entry
/// per series record.
std::vector<double> blowup_indicator_series(const Trajectory& traj);

/// Final value of blowup_indicator_series (max rho0 for a single record).
double blowup_indicator(const Trajectory& traj);

struct AltCriteria {
  double fan_jiang_ou = 0.0;    // sup theta + int ||grad u||_inf dt
  double fang_zi_zhang = 0.0;   // sup theta + sup rho
  double sun_wang_zhang = 0.0;  // sup theta + sup rho + sup 1/rho (infinite with vacuum)
  double wen_zhu = 0.0;         // sup theta + sup rho
  bool vacuum = false;
};

AltCriteria alt_criteria(const Trajectory& traj, double rho_vac_tol = 1e-12);

struct SupnormReport {
  double lhs = 0.0;   // max |v|
  double rhs = 0.0;   // (K/M) sum |v_{i+1} - v_i| + |int rho v| / M
  double mass = 0.0;  // M = K = int rho on the plain interval measure
  bool passed = false;
};

/// Discrete form of ||v||_inf <= (K/M) ||v_x||_1 + |int rho v| / M on [a, b] with
/// Lebesgue measure. Throws DomainError for rho with no positive mass.
SupnormReport weighted_supnorm_check(const Grid& g, std::span<const double> rho,
                                     std::span<const double> v);

}  // namespace symns
