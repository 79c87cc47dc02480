#include <gtest/gtest.h>

#include <cmath>

#include "symns/constitutive.hpp"
#include "symns/errors.hpp"

using namespace symns;

namespace {

GasModel power_barotropic(double r, double A, double gamma) {
  GasModel m;
  m.family = EnergyFamily::power;
  m.r = r;
  m.cold = ColdPressure::barotropic;
  m.A = A;
  m.gamma = gamma;
  m.q = r + 1.0;
  return m;
}

bool has_failure(const AdmissibilityReport& r, const std::string& name) {
  for (const auto& f : r.failures()) {
    if (f == name) return true;
  }
  return false;
}

}  // namespace

TEST(Pressure, Examples) {
  const GasModel ideal = GasModel::ideal();
  EXPECT_EQ(pressure(ideal, 2.0, 3.0), 6.0);
  EXPECT_EQ(pressure(ideal, 0.0, 7.0), 0.0);
  EXPECT_DOUBLE_EQ(pressure(power_barotropic(1.0, 1.0, 2.0), 1.0, 1.0), 2.5);
  EXPECT_EQ(pressure(power_barotropic(1.0, 1.0, 2.0), 0.0, 4.0), 0.0);
}

TEST(Pressure, RejectsNegativeInputs) {
  const GasModel ideal = GasModel::ideal();
  EXPECT_THROW(pressure(ideal, -1.0, 1.0), DomainError);
  EXPECT_THROW(pressure(ideal, 1.0, -1.0), DomainError);
}

TEST(InternalEnergy, Examples) {
  EXPECT_EQ(internal_energy(GasModel::ideal(), 1.0, 5.0), 5.0);
  const GasModel baro = power_barotropic(1.0, 1.0, 2.0);
  EXPECT_DOUBLE_EQ(cold_energy(baro, 3.0), 3.0);
  EXPECT_DOUBLE_EQ(internal_energy(baro, 3.0, 0.0), 3.0);
  EXPECT_DOUBLE_EQ(internal_energy(baro, 0.0, 2.0), thermal_energy(baro, 2.0));
}

TEST(Conductivity, Examples) {
  GasModel m;
  m.kappa0 = 1.0;
  m.q = 2.0;
  EXPECT_EQ(conductivity(m, 2.0), 5.0);
  EXPECT_EQ(conductivity(m, 0.0), 1.0);
  m.kappa0 = 2.0;
  m.q = 0.5;
  EXPECT_DOUBLE_EQ(conductivity(m, 4.0), 6.0);
  EXPECT_THROW(conductivity(m, -0.1), DomainError);
  for (double t = 0.0; t < 100.0; t += 3.7) {
    EXPECT_DOUBLE_EQ(conductivity(m, t) / (1.0 + std::pow(t, m.q)), m.kappa0);
  }
}

TEST(HeatCapacity, Examples) {
  EXPECT_EQ(heat_capacity(GasModel::ideal(), 42.0), 1.0);
  GasModel p;
  p.family = EnergyFamily::power;
  p.r = 2.0;
  p.q = 3.0;
  EXPECT_DOUBLE_EQ(heat_capacity(p, 3.0), 10.0);
  p.r = 0.0;
  EXPECT_DOUBLE_EQ(heat_capacity(p, 7.0), 2.0);
}

TEST(Monotonicity, PressureAndEnergyNondecreasingInTheta) {
  for (const GasModel& m : {GasModel::ideal(), power_barotropic(1.5, 0.3, 1.4)}) {
    for (double rho : {0.0, 0.1, 1.0, 5.0}) {
      double p_prev = -1.0, e_prev = -1.0;
      for (double t = 0.0; t <= 20.0; t += 0.25) {
        EXPECT_GE(pressure(m, rho, t), p_prev);
        EXPECT_GE(internal_energy(m, rho, t), e_prev);
        p_prev = pressure(m, rho, t);
        e_prev = internal_energy(m, rho, t);
      }
    }
  }
}

TEST(ThermoConsistency, IdealGasAndBarotropicVanish) {
  const GasModel ideal = GasModel::ideal();
  EXPECT_LE(std::abs(thermo_consistency_residual(ideal, 1.0, 1.0)), 1e-7);
  GasModel baro = ideal;
  baro.cold = ColdPressure::barotropic;
  baro.A = 1.0;
  baro.gamma = 2.0;
  EXPECT_LE(std::abs(thermo_consistency_residual(baro, 2.0, 1.0)), 1e-7 * 5.0);
  for (int i = 1; i <= 20; ++i) {
    for (int j = 1; j <= 20; ++j) {
      const double rho = 0.05 * i * i, theta = 0.07 * j * j;
      const double p = pressure(ideal, rho, theta);
      EXPECT_LE(std::abs(thermo_consistency_residual(ideal, rho, theta)), 1e-7 * (1.0 + p));
    }
  }
}

TEST(ThermoConsistency, PowerFamilyResidualIsTheAnalyticValue) {
  // P - rho^2 e_rho - theta P_theta = -rho theta^{1+r} r / (1+r).
  GasModel p;
  p.family = EnergyFamily::power;
  p.r = 1.0;
  p.q = 2.0;
  EXPECT_DOUBLE_EQ(thermo_consistency_residual_exact(p, 1.0, 2.0), -2.0);
  EXPECT_NEAR(thermo_consistency_residual(p, 1.0, 2.0), -2.0, 1e-6);
  const GasModel pb = power_barotropic(0.5, 2.0, 1.7);
  for (double rho : {0.3, 1.0, 4.0}) {
    for (double theta : {0.2, 1.0, 3.0}) {
      const double exact = -rho * std::pow(theta, 1.5) * 0.5 / 1.5;
      EXPECT_NEAR(thermo_consistency_residual_exact(pb, rho, theta), exact, 1e-12 * (1 + std::abs(exact)));
      EXPECT_NEAR(thermo_consistency_residual(pb, rho, theta), exact,
                  1e-6 * (1.0 + pressure(pb, rho, theta)));
    }
  }
}

TEST(ThermoConsistency, RejectsBoundaryPoints) {
  EXPECT_THROW(thermo_consistency_residual(GasModel::ideal(), 0.0, 1.0), DomainError);
  EXPECT_THROW(thermo_consistency_residual(GasModel::ideal(), 1.0, 0.0), DomainError);
}

TEST(SoundSpeed, IdealGasIsTheta) {
  EXPECT_DOUBLE_EQ(sound_speed_squared(GasModel::ideal(), 1.0, 1.0), 1.0);
  EXPECT_DOUBLE_EQ(sound_speed_squared(GasModel::ideal(), 3.0, 2.5), 2.5);
}

TEST(Admissibility, BulkViscosityBound) {
  GasModel m = GasModel::ideal();
  m.lam = -0.6;
  EXPECT_TRUE(check_admissible(m, 2).passed());
  m.lam = -0.7;
  const auto r = check_admissible(m, 2);
  EXPECT_FALSE(r.passed());
  EXPECT_TRUE(has_failure(r, "2mu + (m+1)lam > 0"));
}

TEST(Admissibility, QMustExceedR) {
  GasModel m;
  m.family = EnergyFamily::power;
  m.r = 1.0;
  m.q = 1.0;
  const auto r = check_admissible(m, 2);
  EXPECT_FALSE(r.passed());
  EXPECT_TRUE(has_failure(r, "q > r"));
  EXPECT_NE(r.to_string().find("FAIL  q > r"), std::string::npos);
}

TEST(Admissibility, IdealPolytropicPasses) {
  const auto r = check_admissible(GasModel::ideal(1.0, 0.0, 1.0, 2.0), 2);
  EXPECT_TRUE(r.passed()) << r.to_string();
  EXPECT_DOUBLE_EQ(r.c6, 1.0);
  EXPECT_DOUBLE_EQ(r.c7, 1.0);
}

TEST(Admissibility, BarotropicConstantsReported) {
  const auto r = check_admissible(power_barotropic(1.0, 1.0, 1.4), 1);
  EXPECT_TRUE(r.passed()) << r.to_string();
  EXPECT_NEAR(r.c1, 0.4, 1e-12);  // rho e_c' = (gamma - 1) e_c
  EXPECT_GT(r.c4, 0.0);
  EXPECT_LE(r.c4, r.c5);
}

TEST(Admissibility, EnvelopeFlagIsDistinctFromViscousBeta) {
  GasModel m = GasModel::ideal(1.5, 0.2);
  EXPECT_EQ(m.energy_envelope_flag(), 0);
  EXPECT_DOUBLE_EQ(m.beta(), 3.2);
}
