#pragma once

#include <span>

#include "symns/constitutive.hpp"
#include "symns/grid.hpp"

namespace symns {

/// Cell-centred solution (rho, u, v, w, theta) at time t. v and w are the swirl
/// and axial components; they vanish identically in the spherical case.
struct State {
  double t = 0.0;
  Field rho;
  Field u;
  Field v;
  Field w;
  Field theta;

  /// Throws DomainError on size mismatch, negative rho/theta or non-finite entries.
  void validate(const Grid& g) const;
};

struct StepControls {
  double cfl = 0.4;
  int picard_max = 10;
  double picard_tol = 1e-10;
  double rho_vac_tol = 1e-12;
  double dt_max = kInfinity;
  double dt_min = 1e-12;

  void validate() const;
};

struct StepReport {
  double dt = 0.0;
  double clip_mass = 0.0;   // weighted density removed by clipping this step
  double clip_theta = 0.0;  // weighted temperature removed by clipping this step
  int picard_iterations = 0;
  bool picard_converged = true;
};

/// Body force per unit volume added to the momentum equations. Empty fields are
/// treated as zero.
struct MomentumForcing {
  Field fu;
  Field fv;
  Field fw;
};

struct Velocities {
  Field u;
  Field v;
  Field w;
};

/// min(dt_max, cfl dx / max_i(|u_i| + c_i)), c^2 = dP/drho.
/// Throws SolverError(nan_detected) on non-finite input and
/// SolverError(dt_underflow) if the result drops below dt_min.
double cfl_dt(const Grid& g, const State& s, const GasModel& model, const StepControls& c);

/// Conservative update of rho_t + x^{-m}(x^m rho u)_x = 0 with upwinded,
/// minmod-limited face densities and zero wall flux. Clipped negative round-off
/// is added to *clip_mass; a clip larger than 1e-10 max(rho) throws.
Field step_continuity(const Grid& g, const State& s, double dt, double* clip_mass = nullptr);

/// Explicit advection, pressure and centripetal terms followed by implicit
/// viscous solves for u (2mu+lam, Lame operator), v (mu, Lame operator) and
/// w (mu, axial Laplacian). Rows with rho_new < rho_vac_tol keep the advected
/// velocity.
Velocities step_momentum(const Grid& g, const State& s, std::span<const double> rho_new, double dt,
                         const GasModel& model, const StepControls& c,
                         const MomentumForcing* forcing = nullptr);

/// Picard-linearised implicit temperature update of
///   rho Q'(theta) (theta_t + u theta_x) + rho theta Q'(theta) div u
///     = (kappa theta_x)_x + m kappa theta_x / x + dissipation
/// with insulated walls. Vacuum rows solve the stationary conduction balance.
Field step_temperature(const Grid& g, const State& s, std::span<const double> rho_new,
                       const Velocities& vel, double dt, const GasModel& model,
                       const StepControls& c, StepReport* report = nullptr);

/// One split step of size dt: continuity, momentum, temperature.
State advance(const Grid& g, const State& s, double dt, const GasModel& model,
              const StepControls& c, StepReport* report = nullptr);

/// advance() with dt = cfl_dt(s).
State step(const Grid& g, const State& s, const StepControls& c, const GasModel& model,
           StepReport* report = nullptr);

}  // namespace symns
