#include "symns/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "symns/detail/sum.hpp"
#include "symns/errors.hpp"

namespace symns {

namespace {

double ipow(double x, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

}  // namespace

Grid::Grid(double a, double b, int n, int m) : a_(a), b_(b), n_(n), m_(m) {
  if (!(a > 0.0) || !std::isfinite(a)) throw DomainError("grid: inner radius a must be > 0");
  if (!(b > a) || !std::isfinite(b)) throw DomainError("grid: outer radius b must exceed a");
  if (n < 8) throw DomainError("grid: cell count n must be >= 8");
  if (m < 1) throw DomainError("grid: symmetry exponent m must be >= 1");

  dx_ = (b - a) / n;
  const auto nn = static_cast<std::size_t>(n);
  faces_.resize(nn + 1);
  for (std::size_t j = 0; j <= nn; ++j) faces_[j] = a + static_cast<double>(j) * dx_;
  faces_[nn] = b;

  centers_.resize(nn);
  for (std::size_t i = 0; i < nn; ++i) centers_[i] = a + (static_cast<double>(i) + 0.5) * dx_;

  std::vector<double> face_pow(nn + 1);
  face_areas_.resize(nn + 1);
  for (std::size_t j = 0; j <= nn; ++j) {
    face_areas_[j] = ipow(faces_[j], m);
    face_pow[j] = face_areas_[j] * faces_[j];
  }

  weights_.resize(nn);
  center_powers_.resize(nn);
  for (std::size_t i = 0; i < nn; ++i) {
    weights_[i] = (face_pow[i + 1] - face_pow[i]) / (m + 1);
    center_powers_[i] = ipow(centers_[i], m);
  }

  face_interp_.assign(nn + 1, 0.5);
  for (std::size_t j = 1; j < nn; ++j) {
    const double lo = center_powers_[j - 1] * centers_[j - 1];
    const double hi = center_powers_[j] * centers_[j];
    face_interp_[j] = (face_pow[j] - lo) / (hi - lo);
  }
}

double Grid::total_weight() const {
  return (ipow(b_, m_ + 1) - ipow(a_, m_ + 1)) / (m_ + 1);
}

void Grid::require_cell_field(std::span<const double> f, const char* what) const {
  if (f.size() != size()) {
    throw DomainError(std::string(what) + ": length " + std::to_string(f.size()) +
                      " does not match grid size " + std::to_string(size()));
  }
}

Grid make_grid(double a, double b, int n, int m) { return Grid(a, b, n, m); }

double weighted_integral(const Grid& g, std::span<const double> f) {
  g.require_cell_field(f, "weighted_integral");
  detail::CompensatedSum s;
  const auto w = g.weights();
  for (std::size_t i = 0; i < f.size(); ++i) s.add(w[i] * f[i]);
  return s.value();
}

double weighted_lp_norm(const Grid& g, std::span<const double> f, double p) {
  g.require_cell_field(f, "weighted_lp_norm");
  if (!(p >= 1.0)) throw DomainError("weighted_lp_norm: exponent p must be >= 1");
  if (std::isinf(p)) {
    double mx = 0.0;
    for (double v : f) mx = std::max(mx, std::abs(v));
    return mx;
  }
  detail::CompensatedSum s;
  const auto w = g.weights();
  for (std::size_t i = 0; i < f.size(); ++i) s.add(w[i] * std::pow(std::abs(f[i]), p));
  return std::pow(s.value(), 1.0 / p);
}

double surface_measure(int m) {
  if (m == 2) return 4.0 * std::numbers::pi;
  if (m == 1) return 2.0 * std::numbers::pi;
  throw DomainError("ambient norm lifting is only defined for m = 1 or m = 2, got m = " +
                    std::to_string(m));
}

double radial_to_ambient_norm(const Grid& g, std::span<const double> f, double p) {
  const double sigma = surface_measure(g.m());
  const double radial = weighted_lp_norm(g, f, p);
  if (std::isinf(p)) return radial;
  return std::pow(sigma, 1.0 / p) * radial;
}

}  // namespace symns
