#pragma once

#include <span>

#include "symns/constitutive.hpp"
#include "symns/grid.hpp"
#include "symns/tridiagonal.hpp"

namespace symns {

/// Ghost-cell convention at the walls x = a, b.
///   dirichlet0: odd extension, f_ghost = -f_wall_cell (u, v, w)
///   neumann0:   even extension, f_ghost = f_wall_cell (theta)
///   one_sided:  no ghost; second-order one-sided difference (pressure)
enum class Boundary { dirichlet0, neumann0, one_sided };

/// Centred first derivative at cell centres.
Field ddx(const Grid& g, std::span<const double> f, Boundary bc);

/**
 * Divergence of the radial field u (x/|x|) in flux form, x^{-m} (x^m u)_x,
 * evaluated as (F_{i+1/2} - F_{i-1/2}) / w_i with F = x^m u at the faces and
 * zero wall flux. Face values of q = x^m u are interpolated so that q in
 * span{1, x^{m+1}} is reproduced, which makes the result exact for u = x and
 * for the divergence-free u = x^{-m} at interior cells.
 */
Field radial_div(const Grid& g, std::span<const double> u);

/// u_x + m u / x with the dirichlet0 derivative.
Field radial_div_pointwise(const Grid& g, std::span<const double> u);

/// f_xx + m f_x / x - m f / x^2, dirichlet0 ghosts. Annihilates f = x in the interior.
Field lame_operator(const Grid& g, std::span<const double> f);

/// f_xx + m f_x / x as x^{-m} (x^m f_x)_x, dirichlet0 ghosts.
Field axial_laplacian(const Grid& g, std::span<const double> f);

/// Matrices of the two viscous operators, identical stencils to the functions above.
Tridiagonal lame_matrix(const Grid& g);
Tridiagonal axial_matrix(const Grid& g);

/// kappa at the n+1 faces: mean of kappa(theta) of the adjacent cells; wall
/// faces take the wall cell value.
Field face_conductivity(const Grid& g, const GasModel& model, std::span<const double> theta);

/// (kappa theta_x)_x + m kappa theta_x / x in conservative form with insulated
/// walls. Its weighted integral vanishes up to roundoff for any theta.
Field heat_flux_div(const Grid& g, std::span<const double> kappa_face, std::span<const double> theta);

/// Matrix of heat_flux_div for fixed face conductivities.
Tridiagonal heat_flux_matrix(const Grid& g, std::span<const double> kappa_face);

/// Viscous dissipation
///   lam (u_x + m u/x)^2 + mu (w_x^2 + 2 u_x^2 + (v_x - m v/x)^2 + 2 m u^2 / x^2),
/// nonnegative whenever 2 mu + (m+1) lam > 0.
Field dissipation(const Grid& g, std::span<const double> u, std::span<const double> v,
                  std::span<const double> w, const GasModel& model);

/// G = (2 mu + lam) div u - P.
Field effective_viscous_flux(const Grid& g, std::span<const double> u, std::span<const double> p,
                             const GasModel& model);

/// (f_now - f_prev) / dt + u ddx(f_now).
Field material_derivative(const Grid& g, std::span<const double> f_now,
                          std::span<const double> f_prev, double dt, std::span<const double> u,
                          Boundary bc = Boundary::neumann0);

Field pressure_field(const GasModel& model, std::span<const double> rho,
                     std::span<const double> theta);

}  // namespace symns
