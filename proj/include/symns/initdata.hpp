#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "symns/constitutive.hpp"
#include "symns/grid.hpp"
#include "symns/stepper.hpp"

namespace symns {

struct InitialData {
  Field rho0;
  Field u0;
  Field v0;
  Field w0;
  Field theta0;
  double epsilon = 0.0;
  std::string provenance;

  /// rho0 >= 0 with positive weighted mass, theta0 >= 0, finite, sizes match.
  void validate(const Grid& g) const;

  State to_state(double t = 0.0) const;
};

/// rho0 += eps, theta0 += eps; velocities untouched. Throws for eps <= 0.
InitialData regularize(const InitialData& d, double eps);

/**
 * Solves the two-point boundary value problem
 *   (2mu+lam) (u_xx + m u_x/x - m u/x^2) = P_x(rho, theta) + sqrt(weight) g1,
 *   u(a) = u(b) = 0,
 * with the same discrete operators as compatibility_residuals. `weight` defaults
 * to `rho` when empty. One step of iterative refinement is applied.
 */
Field solve_initial_velocity(const Grid& g, const GasModel& model, std::span<const double> rho,
                             std::span<const double> theta, std::span<const double> g1,
                             std::span<const double> weight = {});

struct VacuumResidual {
  std::size_t cell = 0;
  double r1 = 0.0, r2 = 0.0, r3 = 0.0, r4 = 0.0;
};

/// g1..g4 are NaN on vacuum cells (rho0 <= rho_vac_tol); the raw elliptic
/// expressions there are listed in `vacuum`.
struct CompatibilityResiduals {
  Field g1, g2, g3, g4;
  std::vector<VacuumResidual> vacuum;
};

CompatibilityResiduals compatibility_residuals(const Grid& g, const InitialData& d,
                                               const GasModel& model, double rho_vac_tol = 1e-12);

/// The eps-approximate data: rho0 + eps, theta0 + eps, v0, w0 reused, and u0
/// re-solved from the original sqrt(rho0) g1 (zero on vacuum cells).
InitialData approximate_initial_data(const Grid& g, const InitialData& d, const GasModel& model,
                                     double eps, double rho_vac_tol = 1e-12);

struct PresetParams {
  double rho_bar = 1.0;
  double theta_bar = 1.0;
  double amplitude = 0.1;  // manufactured: relative perturbation
  double swirl = 0.1;      // swirl_cylinder: v0 amplitude
  double floor = 0.1;      // vacuum_bump: temperature floor relative to theta_bar
  double velocity = 0.0;   // manufactured: u0 amplitude
};

/// Known tags: equilibrium, vacuum_bump, swirl_cylinder (m = 1 only), manufactured.
InitialData preset(std::string_view name, const Grid& g, const PresetParams& params = {});

/// ((1 + cos(pi s)) / 2)^2 for |s| <= 1, else 0.
double raised_cosine_squared(double s);

}  // namespace symns
