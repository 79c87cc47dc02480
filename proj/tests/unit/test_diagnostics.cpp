#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "symns/diagnostics.hpp"
#include "symns/errors.hpp"
#include "symns/initdata.hpp"

using namespace symns;

namespace {

State constant_state(const Grid& g, double rho, double theta, double u = 0.0) {
  State s;
  s.rho.assign(g.size(), rho);
  s.theta.assign(g.size(), theta);
  s.u.assign(g.size(), u);
  s.v.assign(g.size(), 0.0);
  s.w.assign(g.size(), 0.0);
  return s;
}

Trajectory frozen(const State& s, std::initializer_list<double> times) {
  Trajectory tr;
  for (double t : times) {
    State c = s;
    c.t = t;
    const long k = static_cast<long>(tr.snapshots.size());
    tr.series.push_back(make_record(Grid(1.0, 2.0, static_cast<int>(s.rho.size()), 2), c,
                                    GasModel::ideal(), k, 0.0, 0.0, 0.0, 0));
    tr.series.back().t = t;
    tr.snapshots.push_back(c);
    tr.snapshot_steps.push_back(k);
  }
  return tr;
}

}  // namespace

TEST(Mass, UnitDensitySphericalShell) {
  const Grid g(1.0, 2.0, 37, 2);
  EXPECT_NEAR(mass(g, constant_state(g, 1.0, 1.0)), 7.0 / 3.0, 1e-14);
}

TEST(Mass, UnchangedByAStep) {
  const Grid g(1.0, 2.0, 64, 2);
  const State s = preset("vacuum_bump", g).to_state();
  const State t = step(g, s, StepControls{}, GasModel::ideal());
  EXPECT_NEAR(mass(g, t), mass(g, s), 1e-14 * mass(g, s));
}

TEST(Mass, BumpConvergesAtSecondOrder) {
  // Reference: composite Simpson on a much finer mesh of the same profile.
  const auto exact = [] {
    const int n = 200000;
    const double h = 1.0 / n;
    double sum = 0.0;
    for (int k = 0; k <= n; ++k) {
      const double x = 1.0 + k * h;
      const double f = x * x * raised_cosine_squared((x - 1.5) / 0.25);
      sum += f * ((k == 0 || k == n) ? 1.0 : (k % 2 ? 4.0 : 2.0));
    }
    return sum * h / 3.0;
  }();
  double prev = 0.0;
  for (int n : {32, 64, 128}) {
    const Grid g(1.0, 2.0, n, 2);
    const double e = std::abs(mass(g, preset("vacuum_bump", g).to_state()) - exact);
    if (prev > 0.0) EXPECT_GE(std::log2(prev / e), 1.8);
    prev = e;
  }
}

TEST(Energy, RestStateIsInternalOnly) {
  const Grid g(1.0, 2.0, 32, 2);
  EXPECT_NEAR(total_energy(g, constant_state(g, 1.0, 1.0), GasModel::ideal()), 7.0 / 3.0, 1e-14);
  EXPECT_EQ(kinetic_energy(g, constant_state(g, 1.0, 1.0)), 0.0);
}

TEST(Energy, SplitsIntoKineticAndInternal) {
  const Grid g(1.0, 2.0, 40, 1);
  State s = constant_state(g, 1.0, 1.0);
  for (int i = 0; i < 40; ++i) {
    s.rho[i] = 1.0 + 0.5 * std::sin(0.3 * i);
    s.theta[i] = 2.0 + std::cos(0.7 * i);
    s.u[i] = std::sin(1.1 * i);
    s.v[i] = 0.2 * std::cos(0.4 * i);
    s.w[i] = -0.1;
  }
  const GasModel model = GasModel::ideal();
  Field e(40);
  for (int i = 0; i < 40; ++i) e[i] = s.rho[i] * internal_energy(model, s.rho[i], s.theta[i]);
  const double split = kinetic_energy(g, s) + weighted_integral(g, e);
  EXPECT_NEAR(total_energy(g, s, model), split, 8.0 * std::numeric_limits<double>::epsilon() * split);
}

TEST(EntropyDissipation, ConstantTemperatureIsZero) {
  const Grid g(1.0, 2.0, 32, 2);
  const GasModel model;
  const State s = constant_state(g, 1.0, 3.0);
  EXPECT_EQ(entropy_dissipation(g, frozen(s, {0.0, 0.5, 1.0}), model, 0.5), 0.0);
}

TEST(EntropyDissipation, AlphaRange) {
  const Grid g(1.0, 2.0, 32, 2);
  const GasModel model;  // q - r = 2
  const Trajectory tr = frozen(constant_state(g, 1.0, 1.0), {0.0, 1.0});
  EXPECT_THROW(entropy_dissipation(g, tr, model, 1.0), DomainError);
  EXPECT_THROW(entropy_dissipation(g, tr, model, 0.0), DomainError);
  GasModel close = model;
  close.family = EnergyFamily::power;
  close.r = 1.0;
  close.q = 1.5;
  EXPECT_THROW(entropy_dissipation(g, tr, close, 0.5), DomainError);
  EXPECT_NO_THROW(entropy_dissipation(g, tr, close, 0.4));
}

TEST(EntropyDissipation, ResolutionIndependentForSmoothProfile) {
  const GasModel model;
  double vals[2];
  int k = 0;
  for (int n : {64, 128}) {
    const Grid g(1.0, 2.0, n, 2);
    State s = constant_state(g, 1.0, 1.0);
    for (std::size_t i = 0; i < g.size(); ++i) s.theta[i] = 1.0 + 0.5 * std::cos(std::numbers::pi * (g.x(i) - 1.0));
    vals[k++] = entropy_dissipation(g, frozen(s, {0.0, 1.0}), model, 0.5);
  }
  EXPECT_GT(vals[0], 0.0);
  EXPECT_NEAR(vals[0], vals[1], 0.05 * vals[1]);
}

TEST(SupTheta, Examples) {
  const Grid g(1.0, 2.0, 16, 2);
  const Trajectory tr = frozen(constant_state(g, 1.0, 1.0), {0.0, 1.0, 2.0});
  EXPECT_DOUBLE_EQ(sup_theta_time_integral(tr, 3.0), 2.0);
  const Trajectory hot = frozen(constant_state(g, 1.0, 5.0), {0.0, 0.5, 2.0});
  EXPECT_DOUBLE_EQ(sup_theta_time_integral(hot, 0.0), 2.0);
  EXPECT_LE(sup_theta_time_integral(hot, 1.0), sup_theta_time_integral(hot, 2.0));
}

TEST(Blowup, InitialValueAndMonotone) {
  const Grid g(1.0, 2.0, 32, 2);
  const State s = preset("vacuum_bump", g).to_state();
  const Trajectory one = frozen(s, {0.0});
  EXPECT_DOUBLE_EQ(blowup_indicator(one), *std::max_element(s.rho.begin(), s.rho.end()));
  const Trajectory many = frozen(s, {0.0, 0.3, 0.7, 1.0});
  const auto series = blowup_indicator_series(many);
  ASSERT_EQ(series.size(), 4u);
  for (std::size_t k = 1; k < series.size(); ++k) EXPECT_GE(series[k], series[k - 1]);
}

TEST(AltCriteria, VacuumMakesReciprocalInfinite) {
  const Grid g(1.0, 2.0, 32, 2);
  const AltCriteria a = alt_criteria(frozen(preset("vacuum_bump", g).to_state(), {0.0, 1.0}));
  EXPECT_TRUE(a.vacuum);
  EXPECT_TRUE(std::isinf(a.sun_wang_zhang));
  EXPECT_TRUE(std::isfinite(a.fang_zi_zhang));
}

TEST(AltCriteria, FrozenConstantState) {
  const Grid g(1.0, 2.0, 32, 2);
  const AltCriteria a = alt_criteria(frozen(constant_state(g, 2.0, 3.0), {0.0, 1.5}));
  EXPECT_FALSE(a.vacuum);
  EXPECT_DOUBLE_EQ(a.fan_jiang_ou, 3.0);
  EXPECT_DOUBLE_EQ(a.fang_zi_zhang, 5.0);
  EXPECT_DOUBLE_EQ(a.sun_wang_zhang, 5.5);
  EXPECT_DOUBLE_EQ(a.wen_zhu, 5.0);
}

TEST(Supnorm, ConstantIsEquality) {
  const Grid g(0.0 + 1.0, 2.0, 32, 2);
  const Field rho(32, 1.5);
  const Field v(32, -0.7);
  const SupnormReport r = weighted_supnorm_check(g, rho, v);
  EXPECT_TRUE(r.passed);
  EXPECT_NEAR(r.lhs, 0.7, 1e-15);
  EXPECT_NEAR(r.rhs, 0.7, 1e-14);
  EXPECT_NEAR(r.mass, 1.5, 1e-14);
}

TEST(Supnorm, HoldsForOscillatoryData) {
  const Grid g(1.0, 2.0, 64, 1);
  Field rho(64), v(64);
  for (int i = 0; i < 64; ++i) {
    rho[i] = (i < 20) ? 0.0 : 1.0 + std::sin(0.2 * i);
    v[i] = std::cos(0.9 * i) + 0.3;
  }
  EXPECT_TRUE(weighted_supnorm_check(g, rho, v).passed);
}

TEST(Supnorm, ZeroMassIsAnError) {
  const Grid g(1.0, 2.0, 8, 2);
  EXPECT_THROW(weighted_supnorm_check(g, Field(8, 0.0), Field(8, 1.0)), DomainError);
}

TEST(Record, FieldsFromState) {
  const Grid g(1.0, 2.0, 16, 2);
  State s = constant_state(g, 1.0, 2.0, 0.0);
  s.u[3] = -0.25;
  const DiagnosticsRecord r = make_record(g, s, GasModel::ideal(), 4, 0.01, 0.0, 0.0, 2);
  EXPECT_EQ(r.step, 4);
  EXPECT_EQ(r.max_rho, 1.0);
  EXPECT_EQ(r.min_rho, 1.0);
  EXPECT_EQ(r.max_theta, 2.0);
  EXPECT_EQ(r.max_abs_u, 0.25);
  EXPECT_EQ(r.picard_iterations, 2);
  EXPECT_TRUE(std::isfinite(r.rho_theta_norm_12_5));
}

TEST(Termination, Names) {
  EXPECT_STREQ(to_string(Termination::completed), "completed");
  EXPECT_STREQ(to_string(Termination::dt_underflow), "dt_underflow");
  EXPECT_STREQ(to_string(Termination::solver_failure), "solver_failure");
  EXPECT_STREQ(to_string(Termination::nan_detected), "nan_detected");
}
