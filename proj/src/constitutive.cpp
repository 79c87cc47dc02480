#include "symns/constitutive.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "symns/errors.hpp"

namespace symns {

namespace {

void require_nonnegative(double v, const char* what) {
  if (!(v >= 0.0)) throw DomainError(std::string(what) + " must be finite and >= 0");
}

}  // namespace

void GasModel::validate() const {
  if (!(mu > 0.0)) throw DomainError("model: mu must be > 0");
  if (!std::isfinite(lam)) throw DomainError("model: lam must be finite");
  if (!(kappa0 > 0.0)) throw DomainError("model: kappa0 must be > 0");
  if (!(q >= 0.0)) throw DomainError("model: q must be >= 0");
  if (!(r >= 0.0)) throw DomainError("model: r must be >= 0");
  if (family == EnergyFamily::linear && r != 0.0) {
    throw DomainError("model: the linear energy family has r = 0");
  }
  if (cold == ColdPressure::barotropic) {
    if (!(A > 0.0)) throw DomainError("model: barotropic cold pressure needs A > 0");
    if (!(gamma > 1.0)) throw DomainError("model: barotropic cold pressure needs gamma > 1");
  }
}

GasModel GasModel::ideal(double mu, double lam, double kappa0, double q) {
  GasModel m;
  m.mu = mu;
  m.lam = lam;
  m.kappa0 = kappa0;
  m.q = q;
  return m;
}

double thermal_energy(const GasModel& model, double theta) {
  require_nonnegative(theta, "temperature");
  if (model.family == EnergyFamily::linear) return theta;
  return theta + std::pow(theta, 1.0 + model.r) / (1.0 + model.r);
}

double heat_capacity(const GasModel& model, double theta) {
  require_nonnegative(theta, "temperature");
  if (model.family == EnergyFamily::linear) return 1.0;
  return 1.0 + std::pow(theta, model.r);
}

double cold_pressure(const GasModel& model, double rho) {
  require_nonnegative(rho, "density");
  if (model.cold == ColdPressure::zero) return 0.0;
  return model.A * std::pow(rho, model.gamma);
}

double cold_pressure_slope(const GasModel& model, double rho) {
  require_nonnegative(rho, "density");
  if (model.cold == ColdPressure::zero) return 0.0;
  return model.A * model.gamma * std::pow(rho, model.gamma - 1.0);
}

double cold_energy(const GasModel& model, double rho) {
  require_nonnegative(rho, "density");
  if (model.cold == ColdPressure::zero) return 0.0;
  return model.A * std::pow(rho, model.gamma - 1.0) / (model.gamma - 1.0);
}

double cold_energy_slope(const GasModel& model, double rho) {
  require_nonnegative(rho, "density");
  if (model.cold == ColdPressure::zero) return 0.0;
  return model.A * std::pow(rho, model.gamma - 2.0);
}

double pressure(const GasModel& model, double rho, double theta) {
  require_nonnegative(rho, "density");
  return rho * thermal_energy(model, theta) + cold_pressure(model, rho);
}

double internal_energy(const GasModel& model, double rho, double theta) {
  return thermal_energy(model, theta) + cold_energy(model, rho);
}

double conductivity(const GasModel& model, double theta) {
  require_nonnegative(theta, "temperature");
  return model.kappa0 * (1.0 + std::pow(theta, model.q));
}

double sound_speed_squared(const GasModel& model, double rho, double theta) {
  return thermal_energy(model, theta) + cold_pressure_slope(model, rho);
}

double thermo_consistency_residual(const GasModel& model, double rho, double theta) {
  if (!(rho > 0.0) || !(theta > 0.0)) {
    throw DomainError("thermo_consistency_residual: needs rho > 0 and theta > 0");
  }
  const double hr = 1e-6 * rho;
  const double ht = 1e-6 * theta;
  const double de_drho =
      (internal_energy(model, rho + hr, theta) - internal_energy(model, rho - hr, theta)) /
      (2.0 * hr);
  const double dp_dtheta =
      (pressure(model, rho, theta + ht) - pressure(model, rho, theta - ht)) / (2.0 * ht);
  return pressure(model, rho, theta) - rho * rho * de_drho - theta * dp_dtheta;
}

double thermo_consistency_residual_exact(const GasModel& model, double rho, double theta) {
  require_nonnegative(rho, "density");
  require_nonnegative(theta, "temperature");
  if (model.family == EnergyFamily::linear) return 0.0;
  return -rho * std::pow(theta, 1.0 + model.r) * model.r / (1.0 + model.r);
}

bool AdmissibilityReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

std::vector<std::string> AdmissibilityReport::failures() const {
  std::vector<std::string> out;
  for (const auto& c : checks) {
    if (!c.passed) out.push_back(c.name);
  }
  return out;
}

std::string AdmissibilityReport::to_string() const {
  std::ostringstream os;
  os.precision(6);
  for (const auto& c : checks) {
    os << (c.passed ? "  pass  " : "  FAIL  ") << c.name;
    if (!c.passed) os << "  (witness " << c.witness << ")";
    if (!c.detail.empty()) os << "  " << c.detail;
    os << '\n';
  }
  os << "  sampled constants: C1=" << c1 << " C4=" << c4 << " C5=" << c5 << " C6=" << c6
     << " C7=" << c7 << '\n';
  return os.str();
}

AdmissibilityReport check_admissible(const GasModel& model, int m) {
  AdmissibilityReport rep;
  auto add = [&rep](std::string name, bool ok, double witness, std::string detail = {}) {
    rep.checks.push_back({std::move(name), ok, ok ? 0.0 : witness, std::move(detail)});
  };

  add("mu > 0", model.mu > 0.0, model.mu);
  const double bulk = 2.0 * model.mu + (m + 1) * model.lam;
  add("2mu + (m+1)lam > 0", bulk > 0.0, bulk);
  add("q > r", model.q > model.r, model.q - model.r);
  add("kappa0 > 0", model.kappa0 > 0.0, model.kappa0);
  add("r >= 0", model.r >= 0.0, model.r);
  if (model.family == EnergyFamily::linear) {
    add("linear family has r = 0", model.r == 0.0, model.r);
  }
  if (model.cold == ColdPressure::barotropic) {
    add("barotropic A > 0", model.A > 0.0, model.A);
    add("barotropic gamma > 1", model.gamma > 1.0, model.gamma);
  }
  if (!rep.passed()) return rep;  // the samples below assume a structurally valid model

  // Cold part on a log grid rho in [1e-6, 1e2].
  bool pc_ok = true, ec_ok = true;
  double pc_w = 0.0, ec_w = 0.0;
  double c1 = 0.0;
  for (int k = 0; k <= 80; ++k) {
    const double rho = std::pow(10.0, -6.0 + 8.0 * k / 80.0);
    const double pc = cold_pressure(model, rho);
    const double ec = cold_energy(model, rho);
    if (pc < 0.0 && pc_ok) pc_ok = false, pc_w = rho;
    if (ec < 0.0 && ec_ok) ec_ok = false, ec_w = rho;
    if (ec > 0.0) c1 = std::max(c1, rho * std::abs(cold_energy_slope(model, rho)) / ec);
  }
  add("P_c >= 0", pc_ok, pc_w);
  add("e_c >= 0", ec_ok, ec_w);
  add("P_c(0) = 0 and e_c(0) = 0", cold_pressure(model, 0.0) == 0.0 && cold_energy(model, 0.0) == 0.0,
      0.0);
  rep.c1 = c1;
  add("rho|e_c'| <= C1 e_c", std::isfinite(c1), c1, "C1 sampled");

  // Heat capacity and conductivity envelopes on theta in [0, 1e2].
  constexpr double inf = std::numeric_limits<double>::infinity();
  double c4 = inf, c5 = 0.0, c6 = inf, c7 = 0.0;
  for (int k = 0; k <= 200; ++k) {
    const double theta = k == 0 ? 0.0 : std::pow(10.0, -4.0 + 6.0 * k / 200.0);
    const double qprime = heat_capacity(model, theta) / (1.0 + std::pow(theta, model.r));
    const double kap = conductivity(model, theta) / (1.0 + std::pow(theta, model.q));
    c4 = std::min(c4, qprime);
    c5 = std::max(c5, qprime);
    c6 = std::min(c6, kap);
    c7 = std::max(c7, kap);
  }
  rep.c4 = c4;
  rep.c5 = c5;
  rep.c6 = c6;
  rep.c7 = c7;
  add("C4(1+theta^r) <= Q' <= C5(1+theta^r)", c4 > 0.0 && std::isfinite(c5), c4);
  add("C6(1+theta^q) <= kappa <= C7(1+theta^q)", c6 > 0.0 && std::isfinite(c7), c6);
  return rep;
}

}  // namespace symns
