#include "symns/operators.hpp"

#include <cmath>

#include "symns/errors.hpp"

namespace symns {

namespace {

// Ghost value beyond the wall next to cell `edge`.
double ghost(std::span<const double> f, std::size_t edge, Boundary bc) {
  return bc == Boundary::dirichlet0 ? -f[edge] : f[edge];
}

}  // namespace

Field ddx(const Grid& g, std::span<const double> f, Boundary bc) {
  g.require_cell_field(f, "ddx");
  const std::size_t n = g.size();
  const double inv2dx = 0.5 / g.dx();
  Field out(n);
  for (std::size_t i = 1; i + 1 < n; ++i) out[i] = (f[i + 1] - f[i - 1]) * inv2dx;
  if (bc == Boundary::one_sided) {
    out[0] = (-3.0 * f[0] + 4.0 * f[1] - f[2]) * inv2dx;
    out[n - 1] = (3.0 * f[n - 1] - 4.0 * f[n - 2] + f[n - 3]) * inv2dx;
  } else {
    out[0] = (f[1] - ghost(f, 0, bc)) * inv2dx;
    out[n - 1] = (ghost(f, n - 1, bc) - f[n - 2]) * inv2dx;
  }
  return out;
}

Field radial_div(const Grid& g, std::span<const double> u) {
  g.require_cell_field(u, "radial_div");
  const std::size_t n = g.size();
  const auto xm = g.center_powers();
  const auto d = g.face_interp();
  const auto w = g.weights();

  Field flux(n + 1, 0.0);
  for (std::size_t j = 1; j < n; ++j) {
    const double ql = xm[j - 1] * u[j - 1];
    const double qr = xm[j] * u[j];
    flux[j] = ql + d[j] * (qr - ql);
  }
  Field out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = (flux[i + 1] - flux[i]) / w[i];
  return out;
}

Field radial_div_pointwise(const Grid& g, std::span<const double> u) {
  Field out = ddx(g, u, Boundary::dirichlet0);
  const auto x = g.centers();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += g.m() * u[i] / x[i];
  return out;
}

Field lame_operator(const Grid& g, std::span<const double> f) {
  g.require_cell_field(f, "lame_operator");
  const std::size_t n = g.size();
  const double dx = g.dx();
  const auto x = g.centers();
  const double m = g.m();
  Field out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double fm = i > 0 ? f[i - 1] : -f[0];
    const double fp = i + 1 < n ? f[i + 1] : -f[n - 1];
    const double fxx = ((fp - f[i]) - (f[i] - fm)) / (dx * dx);
    const double fx = (fp - fm) / (2.0 * dx);
    out[i] = fxx + m * (fx - f[i] / x[i]) / x[i];
  }
  return out;
}

Tridiagonal lame_matrix(const Grid& g) {
  const std::size_t n = g.size();
  const double dx = g.dx();
  const auto x = g.centers();
  const double m = g.m();
  Tridiagonal a(n);
  for (std::size_t i = 0; i < n; ++i) {
    a.lower[i] = 1.0 / (dx * dx) - m / (2.0 * dx * x[i]);
    a.upper[i] = 1.0 / (dx * dx) + m / (2.0 * dx * x[i]);
    a.diag[i] = -2.0 / (dx * dx) - m / (x[i] * x[i]);
  }
  a.diag[0] -= a.lower[0];
  a.diag[n - 1] -= a.upper[n - 1];
  a.lower[0] = 0.0;
  a.upper[n - 1] = 0.0;
  return a;
}

Field axial_laplacian(const Grid& g, std::span<const double> f) {
  g.require_cell_field(f, "axial_laplacian");
  const std::size_t n = g.size();
  const double dx = g.dx();
  const auto area = g.face_areas();
  const auto w = g.weights();
  Field flux(n + 1);
  for (std::size_t j = 1; j < n; ++j) flux[j] = area[j] * (f[j] - f[j - 1]) / dx;
  flux[0] = area[0] * (2.0 * f[0]) / dx;
  flux[n] = area[n] * (-2.0 * f[n - 1]) / dx;
  Field out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = (flux[i + 1] - flux[i]) / w[i];
  return out;
}

Tridiagonal axial_matrix(const Grid& g) {
  const std::size_t n = g.size();
  const double dx = g.dx();
  const auto area = g.face_areas();
  const auto w = g.weights();
  Tridiagonal a(n);
  for (std::size_t i = 0; i < n; ++i) {
    a.lower[i] = area[i] / (dx * w[i]);
    a.upper[i] = area[i + 1] / (dx * w[i]);
    a.diag[i] = -(a.lower[i] + a.upper[i]);
  }
  a.diag[0] -= a.lower[0];
  a.diag[n - 1] -= a.upper[n - 1];
  a.lower[0] = 0.0;
  a.upper[n - 1] = 0.0;
  return a;
}

Field face_conductivity(const Grid& g, const GasModel& model, std::span<const double> theta) {
  g.require_cell_field(theta, "face_conductivity");
  const std::size_t n = g.size();
  Field kc(n);
  for (std::size_t i = 0; i < n; ++i) kc[i] = conductivity(model, theta[i]);
  Field kf(n + 1);
  kf[0] = kc[0];
  kf[n] = kc[n - 1];
  for (std::size_t j = 1; j < n; ++j) kf[j] = 0.5 * (kc[j - 1] + kc[j]);
  return kf;
}

Field heat_flux_div(const Grid& g, std::span<const double> kappa_face,
                    std::span<const double> theta) {
  g.require_cell_field(theta, "heat_flux_div");
  const std::size_t n = g.size();
  if (kappa_face.size() != n + 1) {
    throw DomainError("heat_flux_div: face conductivity needs n+1 entries");
  }
  const double dx = g.dx();
  const auto area = g.face_areas();
  const auto w = g.weights();
  Field flux(n + 1, 0.0);
  for (std::size_t j = 1; j < n; ++j) {
    flux[j] = area[j] * kappa_face[j] * (theta[j] - theta[j - 1]) / dx;
  }
  Field out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = (flux[i + 1] - flux[i]) / w[i];
  return out;
}

Tridiagonal heat_flux_matrix(const Grid& g, std::span<const double> kappa_face) {
  const std::size_t n = g.size();
  if (kappa_face.size() != n + 1) {
    throw DomainError("heat_flux_matrix: face conductivity needs n+1 entries");
  }
  const double dx = g.dx();
  const auto area = g.face_areas();
  const auto w = g.weights();
  Tridiagonal a(n);
  for (std::size_t i = 0; i < n; ++i) {
    a.lower[i] = i > 0 ? area[i] * kappa_face[i] / (dx * w[i]) : 0.0;
    a.upper[i] = i + 1 < n ? area[i + 1] * kappa_face[i + 1] / (dx * w[i]) : 0.0;
    a.diag[i] = -(a.lower[i] + a.upper[i]);
  }
  return a;
}

Field dissipation(const Grid& g, std::span<const double> u, std::span<const double> v,
                  std::span<const double> w, const GasModel& model) {
  g.require_cell_field(v, "dissipation v");
  g.require_cell_field(w, "dissipation w");
  const Field ux = ddx(g, u, Boundary::dirichlet0);
  const Field vx = ddx(g, v, Boundary::dirichlet0);
  const Field wx = ddx(g, w, Boundary::dirichlet0);
  const auto x = g.centers();
  const double m = g.m();
  Field out(g.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double div = ux[i] + m * u[i] / x[i];
    const double shear = vx[i] - m * v[i] / x[i];
    out[i] = model.lam * div * div +
             model.mu * (wx[i] * wx[i] + 2.0 * ux[i] * ux[i] + shear * shear +
                         2.0 * m * u[i] * u[i] / (x[i] * x[i]));
  }
  return out;
}

Field effective_viscous_flux(const Grid& g, std::span<const double> u, std::span<const double> p,
                             const GasModel& model) {
  g.require_cell_field(p, "effective_viscous_flux pressure");
  Field out = radial_div(g, u);
  const double beta = model.beta();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = beta * out[i] - p[i];
  return out;
}

Field material_derivative(const Grid& g, std::span<const double> f_now,
                          std::span<const double> f_prev, double dt, std::span<const double> u,
                          Boundary bc) {
  if (!(dt > 0.0)) throw DomainError("material_derivative: dt must be > 0");
  g.require_cell_field(f_prev, "material_derivative f_prev");
  g.require_cell_field(u, "material_derivative u");
  Field out = ddx(g, f_now, bc);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = (f_now[i] - f_prev[i]) / dt + u[i] * out[i];
  }
  return out;
}

Field pressure_field(const GasModel& model, std::span<const double> rho,
                     std::span<const double> theta) {
  if (rho.size() != theta.size()) throw DomainError("pressure_field: length mismatch");
  Field p(rho.size());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = pressure(model, rho[i], theta[i]);
  return p;
}

}  // namespace symns
