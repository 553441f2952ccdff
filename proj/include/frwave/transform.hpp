#pragma once
//==========================================================
// Second-order transform of the density contrast,
//
//   Psi[delta] = (1/ck) d/deta [ (1/tk2) d/deta ( tk2 ck delta ) ],
//
// its expansion Psi = delta'' + P delta' + Q delta, the two-mode kernel
// (the gauge pair), and the inverse (reconstruction by double
// quadrature, fixed up to one kernel element).
//==========================================================

#include <functional>
#include <vector>

#include "frwave/background.hpp"
#include "frwave/lk_system.hpp"

namespace frwave {

struct PsiCoeffs {
  double P;
  double Q;
};

// P = 2/(sk ck) - 2 K sk/ck,  Q = -2/sk^2 - K.
// Throws std::domain_error outside the transform domain (a = 0, and
// ck = 0 for the closed universe).
PsiCoeffs psi_coefficients(double eta, Curvature k);

inline double psi_value(const ContrastDerivs& d, const PsiCoeffs& c) {
  return d.dddelta + c.P * d.ddelta + c.Q * d.delta;
}

double psi_of_state(double eta, const PerturbationState& state,
                    const ModeParams& params);

// Kernel of the transform: Psi[g] = 0 exactly for
//   g1 = I(eta)/(tk2 ck),  I(eta) = int_0^eta tk2
//                          = {eta - tanh eta, eta^3/3, tan eta - eta},
//   g2 = 1/(tk2 ck).
// These carry no physical density perturbation (pure gauge).
struct GaugePair {
  double g1;
  double g2;
};

GaugePair gauge_pair(double eta, Curvature k);

struct GaugeDerivs {
  double g;
  double dg;
  double ddg;
};

// Closed-form g, g', g'' for each kernel mode (quotient rule against
// w = tk2 ck; no numerical differentiation).
GaugeDerivs gauge_g1_derivs(double eta, Curvature k);
GaugeDerivs gauge_g2_derivs(double eta, Curvature k);

// Cumulative integral of samples f on a uniform grid x (n >= 4), zero at
// x[0]. Fourth-order Adams-Moulton composite rule.
std::vector<double> cumulative_quadrature(const std::vector<double>& x,
                                          const std::vector<double>& f);

// Invert the transform on a uniform eta grid:
//   F = c1 + int_{eta0} ck Psi,  G = c2 + int_{eta0} tk2 F,
//   delta = G/(tk2 ck),
// with both quadratures started at the first grid point.
std::vector<double> reconstruct_delta(const std::vector<double>& eta,
                                      const std::vector<double>& psi,
                                      Curvature k, double c1, double c2);

// Same inversion for an analytically known Psi, with both quadratures
// anchored at eta = 0 (the integrands ck Psi and tk2 F are regular
// there), so c1 and c2 multiply exactly the kernel modes g1 and g2.
// The gap [0, eta.front()] is bridged on an internal uniform grid.
std::vector<double> reconstruct_delta_analytic(
    const std::vector<double>& eta, const std::function<double(double)>& psi,
    Curvature k, double c1, double c2);

// Least-squares component of `values` along span{g1, g2} on the grid.
struct GaugeProjection {
  double c1;
  double c2;
  std::vector<double> projection;
};

GaugeProjection project_onto_gauge(const std::vector<double>& eta,
                                   const std::vector<double>& values,
                                   Curvature k);

}  // namespace frwave
