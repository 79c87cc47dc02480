#include "symns/tridiagonal.hpp"

#include <cmath>

#include "symns/errors.hpp"

namespace symns {

std::vector<double> Tridiagonal::apply(std::span<const double> x) const {
  const std::size_t n = size();
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    double s = diag[i] * x[i];
    if (i > 0) s += lower[i] * x[i - 1];
    if (i + 1 < n) s += upper[i] * x[i + 1];
    y[i] = s;
  }
  return y;
}

void require_diagonal_dominance(const Tridiagonal& a, const std::string& label) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double off = (i > 0 ? std::abs(a.lower[i]) : 0.0) + (i + 1 < n ? std::abs(a.upper[i]) : 0.0);
    const double d = std::abs(a.diag[i]);
    // Relative slack: rows that are dominant up to rounding of their own entries pass.
    if (!(d >= off * (1.0 - 1e-14)) || !std::isfinite(d)) {
      throw SolverError(FailureKind::solver_failure,
                        label + ": row " + std::to_string(i) + " is not diagonally dominant (|d|=" +
                            std::to_string(d) + ", off=" + std::to_string(off) + ")");
    }
  }
}

std::vector<double> solve_tridiagonal(const Tridiagonal& a, std::span<const double> rhs) {
  const std::size_t n = a.size();
  std::vector<double> c(n), x(n);
  double pivot = a.diag[0];
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) pivot = a.diag[i] - a.lower[i] * c[i - 1];
    if (pivot == 0.0 || !std::isfinite(pivot)) {
      throw SolverError(FailureKind::solver_failure,
                        "tridiagonal solve: zero pivot at row " + std::to_string(i));
    }
    c[i] = (i + 1 < n) ? a.upper[i] / pivot : 0.0;
    x[i] = (rhs[i] - (i > 0 ? a.lower[i] * x[i - 1] : 0.0)) / pivot;
  }
  for (std::size_t i = n - 1; i-- > 0;) x[i] -= c[i] * x[i + 1];
  return x;
}

}  // namespace symns
