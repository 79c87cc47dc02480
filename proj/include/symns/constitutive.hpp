#pragma once

#include <string>
#include <vector>

namespace symns {

/// Thermal part Q(theta) of the internal energy e = Q(theta) + e_c(rho).
///   linear: Q = theta                              (r = 0)
///   power:  Q = theta + theta^{1+r} / (1+r),  Q' = 1 + theta^r
enum class EnergyFamily { linear, power };

/// Cold pressure P_c(rho).
///   zero:       P_c = 0,            e_c = 0
///   barotropic: P_c = A rho^gamma,  e_c = A rho^{gamma-1} / (gamma-1)
enum class ColdPressure { zero, barotropic };

/**
 * Constitutive model: P = rho Q(theta) + P_c(rho), e = Q(theta) + e_c(rho),
 * kappa(theta) = kappa0 (1 + theta^q), constant viscosities mu and lam.
 *
 * e_c is derived from P_c through rho^2 e_c' = P_c, so the cold part is
 * thermodynamically consistent by construction.
 */
struct GasModel {
  double mu = 1.0;
  double lam = 0.0;
  EnergyFamily family = EnergyFamily::linear;
  double r = 0.0;
  ColdPressure cold = ColdPressure::zero;
  double A = 0.0;
  double gamma = 2.0;
  double kappa0 = 1.0;
  double q = 2.0;

  /// 2 mu + lam, the coefficient of the radial viscous operator.
  double beta() const { return 2.0 * mu + lam; }

  /// The 0/1 flag selecting beta + (1-beta) theta + theta^{1+r} as the Q envelope.
  /// Both provided families use flag 0. Not the viscous coefficient beta().
  int energy_envelope_flag() const { return 0; }

  /// Structural validation (signs, family/parameter consistency). Does not
  /// check the admissibility inequalities; see check_admissible.
  void validate() const;

  static GasModel ideal(double mu = 1.0, double lam = 0.0, double kappa0 = 1.0, double q = 2.0);
};

double thermal_energy(const GasModel& model, double theta);  // Q
double heat_capacity(const GasModel& model, double theta);   // Q'
double cold_pressure(const GasModel& model, double rho);      // P_c
double cold_pressure_slope(const GasModel& model, double rho);  // P_c'
double cold_energy(const GasModel& model, double rho);        // e_c
double cold_energy_slope(const GasModel& model, double rho);  // e_c'

double pressure(const GasModel& model, double rho, double theta);
double internal_energy(const GasModel& model, double rho, double theta);
double conductivity(const GasModel& model, double theta);

/// dP/drho at fixed theta.
double sound_speed_squared(const GasModel& model, double rho, double theta);

/// P - rho^2 de/drho - theta dP/dtheta with both partials by centred finite
/// differences (relative step 1e-6). Requires rho, theta > 0.
double thermo_consistency_residual(const GasModel& model, double rho, double theta);

/// Closed form of the same residual: -rho theta^{1+r} r / (1+r) for the power
/// family, 0 for the linear family (the cold part cancels identically).
double thermo_consistency_residual_exact(const GasModel& model, double rho, double theta);

struct AdmissibilityCheck {
  std::string name;
  bool passed = true;
  double witness = 0.0;  // offending sample or margin when !passed
  std::string detail;
};

struct AdmissibilityReport {
  std::vector<AdmissibilityCheck> checks;
  // Tightest constants observed on the sample grids.
  double c1 = 0.0;        // max rho |e_c'| / e_c
  double c4 = 0.0;        // min Q' / (1 + theta^r)
  double c5 = 0.0;        // max Q' / (1 + theta^r)
  double c6 = 0.0;        // min kappa / (1 + theta^q)
  double c7 = 0.0;        // max kappa / (1 + theta^q)

  bool passed() const;
  std::vector<std::string> failures() const;
  std::string to_string() const;
};

/// Checks mu > 0, 2 mu + (m+1) lam > 0, q > r and samples the cold-part and
/// heat-capacity bounds. Never throws; failures are carried by the report.
AdmissibilityReport check_admissible(const GasModel& model, int m);

}  // namespace symns
