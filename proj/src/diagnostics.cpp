#include "symns/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "symns/detail/sum.hpp"
#include "symns/errors.hpp"
#include "symns/operators.hpp"

namespace symns {

const char* to_string(Termination t) {
  switch (t) {
    case Termination::completed: return "completed";
    case Termination::dt_underflow: return "dt_underflow";
    case Termination::solver_failure: return "solver_failure";
    case Termination::nan_detected: return "nan_detected";
  }
  return "unknown";
}

double mass(const Grid& g, const State& s) { return weighted_integral(g, s.rho); }

double kinetic_energy(const Grid& g, const State& s) {
  s.validate(g);
  const auto w = g.weights();
  detail::CompensatedSum sum;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double speed2 = s.u[i] * s.u[i] + s.v[i] * s.v[i] + s.w[i] * s.w[i];
    sum.add(w[i] * s.rho[i] * 0.5 * speed2);
  }
  return sum.value();
}

double total_energy(const Grid& g, const State& s, const GasModel& model) {
  s.validate(g);
  const auto w = g.weights();
  detail::CompensatedSum sum;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double speed2 = s.u[i] * s.u[i] + s.v[i] * s.v[i] + s.w[i] * s.w[i];
    const double e = internal_energy(model, s.rho[i], s.theta[i]);
    sum.add(w[i] * s.rho[i] * (e + 0.5 * speed2));
  }
  return sum.value();
}

double symmetric_gradient_max(const Grid& g, const State& s) {
  const Field ux = ddx(g, s.u, Boundary::dirichlet0);
  const Field vx = ddx(g, s.v, Boundary::dirichlet0);
  const Field wx = ddx(g, s.w, Boundary::dirichlet0);
  const auto x = g.centers();
  const double m = g.m();
  double out = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    out = std::max({out, std::abs(ux[i]), m * std::abs(s.u[i]) / x[i], std::abs(vx[i]),
                    m * std::abs(s.v[i]) / x[i], std::abs(wx[i])});
  }
  return out;
}

DiagnosticsRecord make_record(const Grid& g, const State& s, const GasModel& model, long step,
                              double dt, double clip_mass_cumulative, double clip_theta,
                              int picard_iterations) {
  DiagnosticsRecord r;
  r.step = step;
  r.t = s.t;
  r.dt = dt;
  r.mass = mass(g, s);
  r.total_energy = total_energy(g, s, model);
  r.kinetic_energy = kinetic_energy(g, s);
  const auto [rmin, rmax] = std::minmax_element(s.rho.begin(), s.rho.end());
  r.min_rho = *rmin;
  r.max_rho = *rmax;
  r.max_theta = *std::max_element(s.theta.begin(), s.theta.end());
  for (double u : s.u) r.max_abs_u = std::max(r.max_abs_u, std::abs(u));
  r.grad_u_max = symmetric_gradient_max(g, s);

  Field rt(g.size());
  for (std::size_t i = 0; i < rt.size(); ++i) rt[i] = s.rho[i] * s.theta[i];
  r.rho_theta_norm_12_5 = (g.m() == 1 || g.m() == 2)
                              ? radial_to_ambient_norm(g, rt, 12.0 / 5.0)
                              : std::numeric_limits<double>::quiet_NaN();

  const Field G = effective_viscous_flux(g, s.u, pressure_field(model, s.rho, s.theta), model);
  for (double v : G) r.G_max = std::max(r.G_max, std::abs(v));
  r.clip_mass_cumulative = clip_mass_cumulative;
  r.clip_theta = clip_theta;
  r.picard_iterations = picard_iterations;
  return r;
}

double entropy_dissipation_rate(const Grid& g, std::span<const double> theta,
                                const GasModel& model, double alpha) {
  g.require_cell_field(theta, "entropy_dissipation theta");
  constexpr double floor = 1e-30;
  const auto area = g.face_areas();
  const double dx = g.dx();
  detail::CompensatedSum sum;
  for (std::size_t j = 1; j < g.size(); ++j) {
    const double th = std::max(0.5 * (theta[j - 1] + theta[j]), floor);
    const double tx = (theta[j] - theta[j - 1]) / dx;
    sum.add(area[j] * dx * (1.0 + std::pow(th, model.q)) * tx * tx / std::pow(th, 1.0 + alpha));
  }
  return sum.value();
}

double entropy_dissipation(const Grid& g, const Trajectory& traj, const GasModel& model,
                           double alpha) {
  const double upper = std::min(1.0, model.q - model.r);
  if (!(alpha > 0.0 && alpha < upper)) {
    throw DomainError("entropy_dissipation: alpha must lie in (0, min(1, q - r))");
  }
  double total = 0.0;
  double prev = 0.0;
  for (std::size_t k = 0; k < traj.snapshots.size(); ++k) {
    const double rate = entropy_dissipation_rate(g, traj.snapshots[k].theta, model, alpha);
    if (k > 0) total += 0.5 * (traj.snapshots[k].t - traj.snapshots[k - 1].t) * (rate + prev);
    prev = rate;
  }
  return total;
}

double sup_theta_time_integral(const Trajectory& traj, double p) {
  double total = 0.0;
  for (std::size_t k = 1; k < traj.series.size(); ++k) {
    const auto& a = traj.series[k - 1];
    const auto& b = traj.series[k];
    total += 0.5 * (b.t - a.t) * (std::pow(a.max_theta, p) + std::pow(b.max_theta, p));
  }
  return total;
}

std::vector<double> blowup_indicator_series(const Trajectory& traj) {
  std::vector<double> out;
  out.reserve(traj.series.size());
  double sup_rho = 0.0;
  double integral = 0.0;
  for (std::size_t k = 0; k < traj.series.size(); ++k) {
    const auto& r = traj.series[k];
    sup_rho = std::max(sup_rho, r.max_rho);
    if (k > 0) {
      const auto& prev = traj.series[k - 1];
      integral += 0.5 * (r.t - prev.t) *
                  (std::pow(prev.rho_theta_norm_12_5, 4) + std::pow(r.rho_theta_norm_12_5, 4));
    }
    out.push_back(sup_rho + integral);
  }
  return out;
}

double blowup_indicator(const Trajectory& traj) {
  if (traj.series.empty()) throw DomainError("blowup_indicator: empty diagnostics series");
  return blowup_indicator_series(traj).back();
}

AltCriteria alt_criteria(const Trajectory& traj, double rho_vac_tol) {
  if (traj.series.empty()) throw DomainError("alt_criteria: empty diagnostics series");
  double sup_theta = 0.0;
  double sup_rho = 0.0;
  double min_rho = kInfinity;
  double grad_integral = 0.0;
  for (std::size_t k = 0; k < traj.series.size(); ++k) {
    const auto& r = traj.series[k];
    sup_theta = std::max(sup_theta, r.max_theta);
    sup_rho = std::max(sup_rho, r.max_rho);
    min_rho = std::min(min_rho, r.min_rho);
    if (k > 0) {
      const auto& prev = traj.series[k - 1];
      grad_integral += 0.5 * (r.t - prev.t) * (prev.grad_u_max + r.grad_u_max);
    }
  }
  AltCriteria c;
  c.vacuum = min_rho < rho_vac_tol;
  c.fan_jiang_ou = sup_theta + grad_integral;
  c.fang_zi_zhang = sup_theta + sup_rho;
  c.wen_zhu = sup_theta + sup_rho;
  c.sun_wang_zhang = c.vacuum ? kInfinity : sup_theta + sup_rho + 1.0 / min_rho;
  return c;
}

SupnormReport weighted_supnorm_check(const Grid& g, std::span<const double> rho,
                                     std::span<const double> v) {
  g.require_cell_field(rho, "weighted_supnorm_check rho");
  g.require_cell_field(v, "weighted_supnorm_check v");
  const double dx = g.dx();
  detail::CompensatedSum m_sum, rv_sum, tv_sum;
  double lhs = 0.0;
  for (std::size_t i = 0; i < rho.size(); ++i) {
    if (!(rho[i] >= 0.0)) throw DomainError("weighted_supnorm_check: rho must be >= 0");
    m_sum.add(rho[i] * dx);
    rv_sum.add(rho[i] * v[i] * dx);
    lhs = std::max(lhs, std::abs(v[i]));
    if (i > 0) tv_sum.add(std::abs(v[i] - v[i - 1]));
  }
  SupnormReport r;
  r.mass = m_sum.value();
  if (!(r.mass > 0.0)) throw DomainError("weighted_supnorm_check: rho has no positive mass");
  const double k_over_m = 1.0;  // K = M
  r.lhs = lhs;
  r.rhs = k_over_m * tv_sum.value() + std::abs(rv_sum.value()) / r.mass;
  r.passed = r.lhs <= r.rhs * (1.0 + 1e-8);
  return r;
}

}  // namespace symns
