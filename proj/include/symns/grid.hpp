#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

namespace symns {

using Field = std::vector<double>;

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/**
 * Uniform cell-centred mesh on the annulus cross-section [a, b].
 *
 * Cell i spans [a + i dx, a + (i+1) dx]. Its weight is the exact integral of
 * x^m over the cell, so weighted integrals of cell-constant fields are exact and
 * the weights telescope to (b^{m+1} - a^{m+1}) / (m+1).
 *
 * Immutable after construction.
 */
class Grid {
 public:
  /// Throws DomainError unless 0 < a < b, n >= 8 and m >= 1.
  Grid(double a, double b, int n, int m);

  double a() const { return a_; }
  double b() const { return b_; }
  int n() const { return n_; }
  int m() const { return m_; }
  double dx() const { return dx_; }
  std::size_t size() const { return static_cast<std::size_t>(n_); }

  /// Cell centres x_i, length n.
  std::span<const double> centers() const { return centers_; }
  /// Face positions, length n+1; faces()[0] == a and faces()[n] == b exactly.
  std::span<const double> faces() const { return faces_; }
  /// Exact cell weights w_i = int_{cell i} x^m dx.
  std::span<const double> weights() const { return weights_; }
  /// x^m at faces (the face "area" up to the surface constant).
  std::span<const double> face_areas() const { return face_areas_; }
  /// x^m at cell centres.
  std::span<const double> center_powers() const { return center_powers_; }
  /// Interpolation factor d_j for interior face j: q_f = q_{j-1} + d_j (q_j - q_{j-1})
  /// reproduces q in span{1, x^{m+1}} exactly. Entries 0 and n are unused.
  std::span<const double> face_interp() const { return face_interp_; }

  double x(std::size_t i) const { return centers_[i]; }

  /// (b^{m+1} - a^{m+1}) / (m+1).
  double total_weight() const;

  /// Throws DomainError if f does not have one entry per cell.
  void require_cell_field(std::span<const double> f, const char* what = "field") const;

 private:
  double a_;
  double b_;
  int n_;
  int m_;
  double dx_;
  std::vector<double> centers_;
  std::vector<double> faces_;
  std::vector<double> weights_;
  std::vector<double> face_areas_;
  std::vector<double> center_powers_;
  std::vector<double> face_interp_;
};

Grid make_grid(double a, double b, int n, int m);

/// sum_i w_i f_i (compensated).
double weighted_integral(const Grid& g, std::span<const double> f);

/// (sum_i w_i |f_i|^p)^{1/p}; p = kInfinity gives max_i |f_i|. Throws for p < 1.
double weighted_lp_norm(const Grid& g, std::span<const double> f, double p);

/// Surface measure of the unit sphere/circle the radial profile is lifted over:
/// 4 pi for m = 2 (R^3), 2 pi for m = 1 (unit axial length). Throws otherwise.
double surface_measure(int m);

/// L^p norm of the symmetric field in the ambient space.
double radial_to_ambient_norm(const Grid& g, std::span<const double> f, double p);

}  // namespace symns
