#include "symns/initdata.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "symns/errors.hpp"
#include "symns/operators.hpp"
#include "symns/tridiagonal.hpp"

namespace symns {

void InitialData::validate(const Grid& g) const {
  to_state().validate(g);
  if (!(weighted_integral(g, rho0) > 0.0)) {
    throw DomainError("initial data: density must have positive total mass");
  }
}

State InitialData::to_state(double t) const { return State{t, rho0, u0, v0, w0, theta0}; }

InitialData regularize(const InitialData& d, double eps) {
  if (!(eps > 0.0) || !std::isfinite(eps)) throw DomainError("regularize: eps must be > 0");
  InitialData out = d;
  for (double& r : out.rho0) r += eps;
  for (double& t : out.theta0) t += eps;
  out.epsilon += eps;
  return out;
}

Field solve_initial_velocity(const Grid& g, const GasModel& model, std::span<const double> rho,
                             std::span<const double> theta, std::span<const double> g1,
                             std::span<const double> weight) {
  g.require_cell_field(rho, "solve_initial_velocity rho");
  g.require_cell_field(theta, "solve_initial_velocity theta");
  g.require_cell_field(g1, "solve_initial_velocity g1");
  if (weight.empty()) weight = rho;
  g.require_cell_field(weight, "solve_initial_velocity weight");
  const double beta = model.beta();
  if (!(beta > 0.0)) throw DomainError("solve_initial_velocity: 2mu + lam must be > 0");
  for (std::size_t i = 0; i < rho.size(); ++i) {
    if (!(rho[i] >= 0.0) || !(weight[i] >= 0.0)) {
      throw DomainError("solve_initial_velocity: densities must be >= 0");
    }
  }

  const Field px = ddx(g, pressure_field(model, rho, theta), Boundary::one_sided);
  Field rhs(g.size());
  for (std::size_t i = 0; i < rhs.size(); ++i) rhs[i] = px[i] + std::sqrt(weight[i]) * g1[i];

  Tridiagonal a = lame_matrix(g);
  for (std::size_t i = 0; i < a.size(); ++i) {
    a.lower[i] *= beta;
    a.diag[i] *= beta;
    a.upper[i] *= beta;
  }
  require_diagonal_dominance(a, "initial velocity problem");
  Field u = solve_tridiagonal(a, rhs);

  // Refine against the pointwise operator used by the residual computation.
  const Field lu = lame_operator(g, u);
  Field res(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) res[i] = rhs[i] - beta * lu[i];
  const Field corr = solve_tridiagonal(a, res);
  for (std::size_t i = 0; i < u.size(); ++i) u[i] += corr[i];
  return u;
}

CompatibilityResiduals compatibility_residuals(const Grid& g, const InitialData& d,
                                               const GasModel& model, double rho_vac_tol) {
  d.to_state().validate(g);
  const std::size_t n = g.size();
  const double beta = model.beta();
  const Field px = ddx(g, pressure_field(model, d.rho0, d.theta0), Boundary::one_sided);
  const Field lu = lame_operator(g, d.u0);
  const Field lv = lame_operator(g, d.v0);
  const Field lw = axial_laplacian(g, d.w0);
  const Field heat = heat_flux_div(g, face_conductivity(g, model, d.theta0), d.theta0);
  const Field diss = dissipation(g, d.u0, d.v0, d.w0, model);

  constexpr double nan = std::numeric_limits<double>::quiet_NaN();
  CompatibilityResiduals out;
  out.g1.assign(n, nan);
  out.g2.assign(n, nan);
  out.g3.assign(n, nan);
  out.g4.assign(n, nan);
  for (std::size_t i = 0; i < n; ++i) {
    const double e1 = beta * lu[i] - px[i];
    const double e2 = model.mu * lv[i];
    const double e3 = model.mu * lw[i];
    const double e4 = heat[i] + diss[i];
    if (d.rho0[i] <= rho_vac_tol) {
      out.vacuum.push_back({i, e1, e2, e3, e4});
      continue;
    }
    const double s = std::sqrt(d.rho0[i]);
    out.g1[i] = e1 / s;
    out.g2[i] = e2 / s;
    out.g3[i] = e3 / s;
    out.g4[i] = e4 / s;
  }
  return out;
}

InitialData approximate_initial_data(const Grid& g, const InitialData& d, const GasModel& model,
                                     double eps, double rho_vac_tol) {
  const CompatibilityResiduals res = compatibility_residuals(g, d, model, rho_vac_tol);
  // sqrt(rho0) g1 on matter cells; the right-hand side vanishes with rho0.
  Field weighted_g1(g.size(), 0.0);
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!std::isnan(res.g1[i])) weighted_g1[i] = std::sqrt(d.rho0[i]) * res.g1[i];
  }
  InitialData out = regularize(d, eps);
  const Field ones(g.size(), 1.0);
  out.u0 = solve_initial_velocity(g, model, out.rho0, out.theta0, weighted_g1, ones);
  out.provenance = d.provenance + "+eps";
  return out;
}

double raised_cosine_squared(double s) {
  if (std::abs(s) >= 1.0) return 0.0;
  const double h = 0.5 * (1.0 + std::cos(std::numbers::pi * s));
  return h * h;
}

InitialData preset(std::string_view name, const Grid& g, const PresetParams& params) {
  if (!(params.rho_bar > 0.0) || !(params.theta_bar > 0.0)) {
    throw DomainError("preset: rho_bar and theta_bar must be > 0");
  }
  const std::size_t n = g.size();
  const auto x = g.centers();
  const double a = g.a();
  const double len = g.b() - g.a();
  const double pi = std::numbers::pi;

  InitialData d;
  d.provenance = std::string(name);
  d.rho0.assign(n, params.rho_bar);
  d.theta0.assign(n, params.theta_bar);
  d.u0.assign(n, 0.0);
  d.v0.assign(n, 0.0);
  d.w0.assign(n, 0.0);

  if (name == "equilibrium") {
    // constant state
  } else if (name == "vacuum_bump") {
    if (!(params.floor >= 0.0)) throw DomainError("preset vacuum_bump: floor must be >= 0");
    const double center = a + 0.5 * len;
    const double half_width = 0.25 * len;
    for (std::size_t i = 0; i < n; ++i) {
      const double bump = raised_cosine_squared((x[i] - center) / half_width);
      d.rho0[i] = params.rho_bar * bump;
      d.theta0[i] = params.theta_bar * (params.floor + bump);
    }
  } else if (name == "swirl_cylinder") {
    if (g.m() != 1) throw DomainError("preset swirl_cylinder requires m = 1 (cylindrical)");
    for (std::size_t i = 0; i < n; ++i) d.v0[i] = params.swirl * std::sin(pi * (x[i] - a) / len);
  } else if (name == "manufactured") {
    if (!(std::abs(params.amplitude) < 1.0)) {
      throw DomainError("preset manufactured: |amplitude| must be < 1");
    }
    for (std::size_t i = 0; i < n; ++i) {
      const double s = (x[i] - a) / len;
      d.rho0[i] = params.rho_bar * (1.0 + params.amplitude * std::cos(pi * s));
      d.theta0[i] = params.theta_bar * (1.0 - params.amplitude * std::cos(pi * s));
      d.u0[i] = params.velocity * std::sin(pi * s);
    }
  } else {
    throw DomainError("unknown preset '" + std::string(name) + "'");
  }
  d.validate(g);
  return d;
}

}  // namespace symns
