#pragma once

#include <span>
#include <string>
#include <vector>

namespace symns {

/// Row i reads lower[i] x[i-1] + diag[i] x[i] + upper[i] x[i+1] = rhs[i];
/// lower[0] and upper[n-1] are ignored.
struct Tridiagonal {
  std::vector<double> lower;
  std::vector<double> diag;
  std::vector<double> upper;

  explicit Tridiagonal(std::size_t n = 0) : lower(n, 0.0), diag(n, 0.0), upper(n, 0.0) {}

  std::size_t size() const { return diag.size(); }

  /// y = A x.
  std::vector<double> apply(std::span<const double> x) const;
};

/// Throws SolverError(solver_failure) naming the first row that is not weakly
/// diagonally dominant, |d_i| >= |l_i| + |u_i|. `label` prefixes the message.
void require_diagonal_dominance(const Tridiagonal& a, const std::string& label);

/// Thomas recurrence. Throws SolverError(solver_failure) on a vanishing pivot.
std::vector<double> solve_tridiagonal(const Tridiagonal& a, std::span<const double> rhs);

}  // namespace symns
