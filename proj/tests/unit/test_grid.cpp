#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "symns/errors.hpp"
#include "symns/grid.hpp"

using namespace symns;

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Composite Simpson for int_a^b x^m f(x) dx with 2k panels.
template <class F>
double simpson(F f, double a, double b, int m, int panels) {
  const double h = (b - a) / panels;
  double s = std::pow(a, m) * f(a) + std::pow(b, m) * f(b);
  for (int k = 1; k < panels; ++k) {
    const double x = a + k * h;
    s += (k % 2 ? 4.0 : 2.0) * std::pow(x, m) * f(x);
  }
  return s * h / 3.0;
}

}  // namespace

TEST(Grid, SphericalUnitGridHasExactTotalWeight) {
  const Grid g = make_grid(1.0, 2.0, 8, 2);
  EXPECT_EQ(g.dx(), 0.125);
  EXPECT_DOUBLE_EQ(weighted_integral(g, Field(8, 1.0)), 7.0 / 3.0);
  EXPECT_EQ(g.faces().front(), 1.0);
  EXPECT_EQ(g.faces().back(), 2.0);
}

TEST(Grid, CylindricalTotalWeight) {
  const Grid g = make_grid(1.0, 2.0, 8, 1);
  EXPECT_DOUBLE_EQ(weighted_integral(g, Field(8, 1.0)), 1.5);
}

TEST(Grid, RejectsInvalidParameters) {
  EXPECT_THROW(make_grid(0.0, 1.0, 8, 2), DomainError);
  EXPECT_THROW(make_grid(-1.0, 1.0, 8, 2), DomainError);
  EXPECT_THROW(make_grid(2.0, 1.0, 8, 2), DomainError);
  EXPECT_THROW(make_grid(1.0, 1.0, 8, 2), DomainError);
  EXPECT_THROW(make_grid(1.0, 2.0, 7, 2), DomainError);
  EXPECT_THROW(make_grid(1.0, 2.0, 8, 0), DomainError);
}

TEST(Grid, CentersAreUniformAndIncreasing) {
  const Grid g(0.5, 3.0, 40, 3);
  const auto x = g.centers();
  for (std::size_t i = 1; i < x.size(); ++i) {
    EXPECT_GT(x[i], x[i - 1]);
    EXPECT_NEAR(x[i] - x[i - 1], g.dx(), 1e-14);
  }
  EXPECT_NEAR(x.front(), 0.5 + 0.5 * g.dx(), 1e-15);
}

TEST(Grid, WeightsTelescopeWithinFourUlps) {
  for (int m = 1; m <= 4; ++m) {
    for (int n : {8, 9, 17, 64, 100, 1000}) {
      const Grid g(1.0, 2.0, n, m);
      const double exact = g.total_weight();
      EXPECT_LE(std::abs(weighted_integral(g, Field(n, 1.0)) - exact), 4 * kEps * exact)
          << "m=" << m << " n=" << n;
    }
  }
}

TEST(Grid, WeightedIntegralOfZeroIsZero) {
  const Grid g(1.0, 2.0, 16, 2);
  EXPECT_EQ(weighted_integral(g, Field(16, 0.0)), 0.0);
}

TEST(Grid, WeightedIntegralRejectsLengthMismatch) {
  const Grid g(1.0, 2.0, 16, 2);
  EXPECT_THROW(weighted_integral(g, Field(15, 1.0)), DomainError);
}

TEST(Grid, WeightedIntegralMatchesSimpsonOracleAtSecondOrder) {
  auto rho = [](double x) { return 1.0 + 0.5 * std::sin(3.0 * x) * std::exp(-x); };
  double prev_err = 0.0;
  for (int n : {16, 32, 64}) {
    const Grid g(1.0, 2.0, n, 2);
    Field f(n);
    for (int i = 0; i < n; ++i) f[i] = rho(g.x(i));
    const double oracle = simpson(rho, 1.0, 2.0, 2, 16 * n);
    const double err = std::abs(weighted_integral(g, f) - oracle);
    EXPECT_LT(err, 0.1 * g.dx() * g.dx());
    if (prev_err > 0.0) EXPECT_GT(std::log2(prev_err / err), 1.8);
    prev_err = err;
  }
}

TEST(Grid, LpNormExamples) {
  const Grid g(1.0, 2.0, 32, 2);
  EXPECT_EQ(weighted_lp_norm(g, Field(32, -3.5), kInfinity), 3.5);
  EXPECT_NEAR(weighted_lp_norm(g, Field(32, 1.0), 2.0), std::sqrt(7.0 / 3.0), 1e-15);
  EXPECT_THROW(weighted_lp_norm(g, Field(32, 1.0), 0.5), DomainError);
}

TEST(Grid, LpNormMatchesExtendedPrecisionPowerSum) {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  const Grid g(0.7, 1.9, 200, 2);
  Field f(200);
  for (double& v : f) v = dist(rng);
  const double p = 12.0 / 5.0;
  long double sum = 0.0L;
  for (std::size_t i = 0; i < f.size(); ++i) {
    sum += static_cast<long double>(g.weights()[i]) * std::pow(std::fabs((long double)f[i]), (long double)p);
  }
  const double oracle = static_cast<double>(std::pow(sum, 1.0L / p));
  EXPECT_NEAR(weighted_lp_norm(g, f, p), oracle, 1e-14 * oracle);
}

TEST(Grid, LpNormMonotoneAndHolder) {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  const Grid g(1.0, 3.0, 50, 1);
  for (int trial = 0; trial < 200; ++trial) {
    Field f(50), bigger(50);
    for (int i = 0; i < 50; ++i) {
      f[i] = dist(rng);
      bigger[i] = std::abs(f[i]) + std::abs(dist(rng));
    }
    for (double p : {1.0, 2.0, 2.4, 7.0, kInfinity}) {
      EXPECT_LE(weighted_lp_norm(g, f, p), weighted_lp_norm(g, bigger, p));
    }
    EXPECT_LE(weighted_lp_norm(g, f, 1.0),
              weighted_lp_norm(g, f, 2.0) * weighted_lp_norm(g, Field(50, 1.0), 2.0) * (1 + 1e-14));
  }
}

TEST(Grid, AmbientNormExamples) {
  const Grid g(1.0, 2.0, 64, 2);
  const double p = 12.0 / 5.0;
  EXPECT_NEAR(radial_to_ambient_norm(g, Field(64, 1.0), p),
              std::pow(4.0 * std::numbers::pi * 7.0 / 3.0, 5.0 / 12.0), 1e-13);

  std::mt19937 rng(3);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  Field f(64);
  for (double& v : f) v = dist(rng);
  EXPECT_EQ(radial_to_ambient_norm(g, f, kInfinity), weighted_lp_norm(g, f, kInfinity));
  EXPECT_NEAR(radial_to_ambient_norm(g, f, 2.0),
              std::sqrt(4.0 * std::numbers::pi) * weighted_lp_norm(g, f, 2.0), 1e-14);

  const Grid c(1.0, 2.0, 64, 1);
  EXPECT_NEAR(radial_to_ambient_norm(c, Field(64, 1.0), 2.0), std::sqrt(2.0 * std::numbers::pi * 1.5),
              1e-14);
}

TEST(Grid, AmbientNormUnsupportedExponent) {
  const Grid g(1.0, 2.0, 16, 3);
  EXPECT_THROW(radial_to_ambient_norm(g, Field(16, 1.0), 2.0), DomainError);
  EXPECT_THROW(surface_measure(4), DomainError);
}
