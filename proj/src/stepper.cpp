#include "symns/stepper.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "symns/errors.hpp"
#include "symns/operators.hpp"
#include "symns/tridiagonal.hpp"

namespace symns {

namespace {

constexpr double kClipLimit = 1e-10;

bool all_finite(std::span<const double> f) {
  return std::all_of(f.begin(), f.end(), [](double v) { return std::isfinite(v); });
}

double max_abs(std::span<const double> f) {
  double m = 0.0;
  for (double v : f) m = std::max(m, std::abs(v));
  return m;
}

double minmod(double a, double b) {
  if (a * b <= 0.0) return 0.0;
  return std::abs(a) < std::abs(b) ? a : b;
}

// Explicit u_i * f_x at cell i with dirichlet0 ghosts. Central differences where
// the cell Peclet number rho |u| dx / coef is at most 2 (viscosity dominates),
// first-order upwind otherwise and in vacuum.
double advect(std::span<const double> f, std::span<const double> u, std::size_t i, double dx,
              double rho, double coef, bool vacuum) {
  const std::size_t n = f.size();
  const double fm = i > 0 ? f[i - 1] : -f[0];
  const double fp = i + 1 < n ? f[i + 1] : -f[n - 1];
  const double ui = u[i];
  if (!vacuum && rho * std::abs(ui) * dx <= 2.0 * coef) return ui * (fp - fm) / (2.0 * dx);
  return ui >= 0.0 ? ui * (f[i] - fm) / dx : ui * (fp - f[i]) / dx;
}

// Solves (rho - dt coef M) delta = dt * rhs on non-vacuum rows and
// delta = frozen on vacuum rows; returns base + delta.
Field implicit_velocity_update(const Tridiagonal& op, double coef, std::span<const double> rho,
                               const std::vector<bool>& vacuum, std::span<const double> base,
                               std::span<const double> rate, std::span<const double> frozen,
                               double dt, const char* label) {
  const std::size_t n = base.size();
  Tridiagonal a(n);
  Field rhs(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (vacuum[i]) {
      a.diag[i] = 1.0;
      rhs[i] = frozen[i];
      continue;
    }
    a.lower[i] = -dt * coef * op.lower[i];
    a.diag[i] = rho[i] - dt * coef * op.diag[i];
    a.upper[i] = -dt * coef * op.upper[i];
    rhs[i] = dt * rate[i];
  }
  require_diagonal_dominance(a, std::string("momentum solve (") + label + ")");
  const Field delta = solve_tridiagonal(a, rhs);
  Field out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = base[i] + delta[i];
  return out;
}

void clip_negative(const Grid& g, Field& f, double* clip_total, const char* what) {
  const double scale = max_abs(f);
  const auto w = g.weights();
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] >= 0.0) continue;
    if (-f[i] > kClipLimit * std::max(scale, 1e-300)) {
      throw SolverError(FailureKind::solver_failure,
                        std::string(what) + " clip overrun at cell " + std::to_string(i) + " (" +
                            std::to_string(f[i]) + ")");
    }
    if (clip_total) *clip_total += w[i] * (-f[i]);
    f[i] = 0.0;
  }
}

}  // namespace

void State::validate(const Grid& g) const {
  g.require_cell_field(rho, "state rho");
  g.require_cell_field(u, "state u");
  g.require_cell_field(v, "state v");
  g.require_cell_field(w, "state w");
  g.require_cell_field(theta, "state theta");
  for (const Field* f : {&rho, &u, &v, &w, &theta}) {
    if (!all_finite(*f)) throw DomainError("state has non-finite entries");
  }
  for (std::size_t i = 0; i < rho.size(); ++i) {
    if (rho[i] < 0.0) throw DomainError("state: negative density at cell " + std::to_string(i));
    if (theta[i] < 0.0) {
      throw DomainError("state: negative temperature at cell " + std::to_string(i));
    }
  }
}

void StepControls::validate() const {
  if (!(cfl > 0.0 && cfl < 1.0)) throw DomainError("controls: cfl must lie in (0, 1)");
  if (picard_max < 1) throw DomainError("controls: picard_max must be >= 1");
  if (!(picard_tol > 0.0)) throw DomainError("controls: picard_tol must be > 0");
  if (!(rho_vac_tol > 0.0)) throw DomainError("controls: rho_vac_tol must be > 0");
  if (!(dt_max > 0.0)) throw DomainError("controls: dt_max must be > 0");
  if (!(dt_min > 0.0) || dt_min > dt_max) {
    throw DomainError("controls: dt_min must be > 0 and <= dt_max");
  }
}

double cfl_dt(const Grid& g, const State& s, const GasModel& model, const StepControls& c) {
  if (!all_finite(s.u) || !all_finite(s.rho) || !all_finite(s.theta)) {
    throw SolverError(FailureKind::nan_detected, "cfl_dt: non-finite state");
  }
  double speed = 0.0;
  for (std::size_t i = 0; i < s.u.size(); ++i) {
    const double c2 = sound_speed_squared(model, s.rho[i], s.theta[i]);
    speed = std::max(speed, std::abs(s.u[i]) + std::sqrt(std::max(c2, 0.0)));
  }
  double dt = speed > 0.0 ? c.cfl * g.dx() / speed : c.dt_max;
  dt = std::min(dt, c.dt_max);
  if (!(dt >= c.dt_min)) {
    throw SolverError(FailureKind::dt_underflow,
                      "time step " + std::to_string(dt) + " fell below dt_min");
  }
  return dt;
}

Field step_continuity(const Grid& g, const State& s, double dt, double* clip_mass) {
  const std::size_t n = g.size();
  const auto& rho = s.rho;
  const auto& u = s.u;
  const auto area = g.face_areas();
  const auto w = g.weights();

  Field slope(n, 0.0);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    slope[i] = minmod(rho[i] - rho[i - 1], rho[i + 1] - rho[i]);
  }
  Field flux(n + 1, 0.0);
  for (std::size_t j = 1; j < n; ++j) {
    const double uf = 0.5 * (u[j - 1] + u[j]);
    const double up = uf >= 0.0 ? rho[j - 1] + 0.5 * slope[j - 1] : rho[j] - 0.5 * slope[j];
    flux[j] = area[j] * uf * up;
  }
  Field out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = rho[i] - dt * (flux[i + 1] - flux[i]) / w[i];
  clip_negative(g, out, clip_mass, "density");
  return out;
}

Velocities step_momentum(const Grid& g, const State& s, std::span<const double> rho_new, double dt,
                         const GasModel& model, const StepControls& c,
                         const MomentumForcing* forcing) {
  g.require_cell_field(rho_new, "step_momentum rho");
  const std::size_t n = g.size();
  const double dx = g.dx();
  const auto x = g.centers();
  const double beta = model.beta();
  const double mu = model.mu;

  std::vector<bool> vacuum(n);
  for (std::size_t i = 0; i < n; ++i) vacuum[i] = rho_new[i] < c.rho_vac_tol;

  const Field p = pressure_field(model, rho_new, s.theta);
  const Field px = ddx(g, p, Boundary::one_sided);
  const Tridiagonal lame = lame_matrix(g);
  const Tridiagonal axial = axial_matrix(g);
  const Field lu = lame.apply(s.u);
  const Field lv = lame.apply(s.v);
  const Field lw = axial.apply(s.w);

  auto force = [&](const Field* f, std::size_t i) {
    return (f && !f->empty()) ? (*f)[i] : 0.0;
  };
  const Field* fu = forcing ? &forcing->fu : nullptr;
  const Field* fv = forcing ? &forcing->fv : nullptr;
  const Field* fw = forcing ? &forcing->fw : nullptr;

  Field rate_u(n), rate_v(n), rate_w(n);
  Field frozen_u(n), frozen_v(n), frozen_w(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double r = rho_new[i];
    const bool vac = vacuum[i];
    const double au = advect(s.u, s.u, i, dx, r, beta, vac);
    const double av = advect(s.v, s.u, i, dx, r, mu, vac);
    const double aw = advect(s.w, s.u, i, dx, r, mu, vac);
    if (vac) {
      frozen_u[i] = -dt * au;
      frozen_v[i] = -dt * av;
      frozen_w[i] = -dt * aw;
      continue;
    }
    rate_u[i] = -r * au - px[i] + r * s.v[i] * s.v[i] / x[i] + beta * lu[i] + force(fu, i);
    rate_v[i] = -r * av - r * s.u[i] * s.v[i] / x[i] + mu * lv[i] + force(fv, i);
    rate_w[i] = -r * aw + mu * lw[i] + force(fw, i);
  }

  Velocities out;
  out.u = implicit_velocity_update(lame, beta, rho_new, vacuum, s.u, rate_u, frozen_u, dt, "u");
  out.v = implicit_velocity_update(lame, mu, rho_new, vacuum, s.v, rate_v, frozen_v, dt, "v");
  out.w = implicit_velocity_update(axial, mu, rho_new, vacuum, s.w, rate_w, frozen_w, dt, "w");
  return out;
}

Field step_temperature(const Grid& g, const State& s, std::span<const double> rho_new,
                       const Velocities& vel, double dt, const GasModel& model,
                       const StepControls& c, StepReport* report) {
  g.require_cell_field(rho_new, "step_temperature rho");
  const std::size_t n = g.size();
  const double dx = g.dx();
  const Field& theta_n = s.theta;

  std::vector<bool> vacuum(n);
  bool any_matter = false;
  for (std::size_t i = 0; i < n; ++i) {
    vacuum[i] = rho_new[i] < c.rho_vac_tol;
    any_matter = any_matter || !vacuum[i];
  }
  if (!any_matter) {
    throw SolverError(FailureKind::solver_failure, "temperature solve: no cell above vacuum");
  }

  const Field heating = dissipation(g, vel.u, vel.v, vel.w, model);
  const Field div = radial_div(g, vel.u);

  Field theta_k = theta_n;
  double prev_update = kInfinity;
  int growth = 0;
  int iterations = 0;
  bool converged = false;

  for (int k = 0; k < c.picard_max; ++k) {
    ++iterations;
    const Field kf = face_conductivity(g, model, theta_k);
    const Tridiagonal h = heat_flux_matrix(g, kf);
    const Field h_theta = heat_flux_div(g, kf, theta_n);

    Tridiagonal a(n);
    Field rhs(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (vacuum[i]) {
        a.lower[i] = -h.lower[i];
        a.diag[i] = -h.diag[i];
        a.upper[i] = -h.upper[i];
        rhs[i] = h_theta[i] + heating[i];
        continue;
      }
      const double qp = heat_capacity(model, theta_k[i]);
      const double mass = rho_new[i] * qp / dt;
      const double cadv = rho_new[i] * vel.u[i] * qp;
      const double comp = rho_new[i] * qp * div[i];

      // Advection stencil (al, ad, au) with even ghosts folded into the diagonal.
      double al = -cadv / (2.0 * dx), ad = 0.0, au = cadv / (2.0 * dx);
      if (i == 0) ad += al, al = 0.0;
      if (i + 1 == n) ad += au, au = 0.0;
      const bool central_ok = (al - h.lower[i] <= 0.0) && (au - h.upper[i] <= 0.0);
      if (!central_ok) {
        al = ad = au = 0.0;
        if (cadv >= 0.0) {
          if (i > 0) ad = cadv / dx, al = -cadv / dx;
        } else {
          if (i + 1 < n) ad = -cadv / dx, au = cadv / dx;
        }
      }

      a.lower[i] = al - h.lower[i];
      a.diag[i] = mass + ad + std::max(comp, 0.0) - h.diag[i];
      a.upper[i] = au - h.upper[i];

      double adv_n = ad * theta_n[i];
      if (i > 0) adv_n += al * theta_n[i - 1];
      if (i + 1 < n) adv_n += au * theta_n[i + 1];
      rhs[i] = -adv_n - std::max(comp, 0.0) * theta_n[i] - std::min(comp, 0.0) * theta_k[i] +
               h_theta[i] + heating[i];
    }

    require_diagonal_dominance(a, "temperature solve");
    const Field delta = solve_tridiagonal(a, rhs);

    double upd = 0.0, mag = 0.0;
    Field next(n);
    for (std::size_t i = 0; i < n; ++i) {
      next[i] = theta_n[i] + delta[i];
      upd = std::max(upd, std::abs(next[i] - theta_k[i]));
      mag = std::max(mag, std::abs(next[i]));
    }
    theta_k = std::move(next);
    const double rel = upd / std::max(mag, 1e-300);
    if (!std::isfinite(rel)) {
      throw SolverError(FailureKind::nan_detected, "temperature solve produced non-finite values");
    }
    if (rel <= c.picard_tol) {
      converged = true;
      break;
    }
    growth = rel > prev_update ? growth + 1 : 0;
    if (growth >= 2) {
      throw SolverError(FailureKind::solver_failure,
                        "Picard iteration diverging (update " + std::to_string(rel) + ")");
    }
    prev_update = rel;
  }

  double clip = 0.0;
  clip_negative(g, theta_k, &clip, "temperature");
  if (report) {
    report->clip_theta += clip;
    report->picard_iterations = iterations;
    report->picard_converged = converged;
  }
  return theta_k;
}

State advance(const Grid& g, const State& s, double dt, const GasModel& model,
              const StepControls& c, StepReport* report) {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw DomainError("advance: dt must be finite and > 0");
  StepReport local;
  local.dt = dt;
  State out;
  out.t = s.t + dt;
  out.rho = step_continuity(g, s, dt, &local.clip_mass);
  Velocities vel = step_momentum(g, s, out.rho, dt, model, c);
  out.theta = step_temperature(g, s, out.rho, vel, dt, model, c, &local);
  out.u = std::move(vel.u);
  out.v = std::move(vel.v);
  out.w = std::move(vel.w);
  for (const Field* f : {&out.rho, &out.u, &out.v, &out.w, &out.theta}) {
    if (!all_finite(*f)) throw SolverError(FailureKind::nan_detected, "non-finite state after step");
  }
  if (report) *report = local;
  return out;
}

State step(const Grid& g, const State& s, const StepControls& c, const GasModel& model,
           StepReport* report) {
  return advance(g, s, cfl_dt(g, s, model, c), model, c, report);
}

}  // namespace symns
