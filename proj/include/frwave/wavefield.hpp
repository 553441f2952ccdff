#pragma once
//==========================================================
// The static-space wave field: dispersion relation, group velocity,
// closed-form temporal modes, and the radial eigenfunctions of the
// Beltrami-Laplace operator on the constant-curvature 3-space,
// together with a finite-difference radial Laplacian used as an
// independent eigenvalue oracle in the tests.
//==========================================================

#include <vector>

#include "frwave/background.hpp"

namespace frwave {

// omega = sqrt((k^2 - K)/3). Throws std::domain_error for k^2 - K < 0
// (supercurvature wave numbers carry no acoustic mode).
double omega(double k, Curvature curv);

// v_g = d(omega)/dk = k/(sqrt(3) sqrt(k^2 - K)); for the flat universe the
// exact constant 1/sqrt(3), independent of k. Throws std::domain_error for
// k^2 - K <= 0.
double group_velocity(double k, Curvature curv);

// A cos(omega eta) + B sin(omega eta); the omega = 0 degenerate branch is
// A + B eta.
double analytic_psi(double A, double B, double omega, double eta);

// Radial profile of the spatial eigenfunction, Lap Y = -(k^2 - K) Y,
// normalized to 1 at chi = 0. Closed forms:
//   l = 0: sin(k chi)/(k sK(chi))
//   l = 1: (3/kappa2) [sin(k chi) cK - k cos(k chi) sK]/(k sK^2)
// with sK, cK the curvature sine and cosine of chi. l >= 2 throws
// (not implemented); the eigenvalue never depends on l.
double radial_mode(Curvature curv, double k, int l, double chi);

// Centered second-order finite-difference application of the radial part
// of the Beltrami-Laplace operator, f'' + 2 (cK/sK) f', to samples on a
// uniform chi grid (>= 5 points). Returns interior values only
// (size n - 2). Test oracle for the eigenvalue of radial_mode at l = 0.
std::vector<double> radial_laplacian_fd(const std::vector<double>& chi,
                                        const std::vector<double>& samples,
                                        Curvature curv);

}  // namespace frwave
