#include <gtest/gtest.h>

#include <random>

#include "symns/errors.hpp"
#include "symns/tridiagonal.hpp"

using namespace symns;

TEST(Tridiagonal, SolvesRandomDominantSystems) {
  std::mt19937 rng(9);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 5 + trial;
    Tridiagonal a(n);
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i) {
      a.lower[i] = i > 0 ? dist(rng) : 0.0;
      a.upper[i] = i + 1 < n ? dist(rng) : 0.0;
      a.diag[i] = std::abs(a.lower[i]) + std::abs(a.upper[i]) + 0.1 + std::abs(dist(rng));
      x[i] = dist(rng);
    }
    const auto b = a.apply(x);
    const auto y = solve_tridiagonal(a, b);
    for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(y[i], x[i], 1e-12);
  }
}

TEST(Tridiagonal, DominanceCheckNamesTheRow) {
  Tridiagonal a(4);
  for (std::size_t i = 0; i < 4; ++i) a.diag[i] = 2.0;
  a.lower[2] = 1.5;
  a.upper[2] = 1.5;
  try {
    require_diagonal_dominance(a, "test system");
    FAIL() << "expected a SolverError";
  } catch (const SolverError& e) {
    EXPECT_EQ(e.kind(), FailureKind::solver_failure);
    EXPECT_NE(std::string(e.what()).find("row 2"), std::string::npos) << e.what();
  }
}

TEST(Tridiagonal, ZeroPivotThrows) {
  Tridiagonal a(3);
  a.diag = {0.0, 1.0, 1.0};
  EXPECT_THROW(solve_tridiagonal(a, std::vector<double>{1.0, 1.0, 1.0}), SolverError);
}
