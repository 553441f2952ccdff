#pragma once
//==========================================================
// Coupled second-order system for a single spatial mode of
// the acoustic perturbation, written in conformal time, and
// the density contrast assembled from its solution.
//==========================================================

#include <cstddef>

#include "frwave/background.hpp"
#include "frwave/mode.hpp"

namespace frwave {

struct ModeAccel {
  double ddlambda = 0.0;
  double ddmu = 0.0;
};

// Right-hand side of the mode system at conformal time eta:
//   lambda'' = -2 h lambda' + (kappa2/3) (lambda + mu)
//   mu''     = -3 h mu'     - (2/3) (kappa2 - 3K) (lambda + mu)
// with h = a'/a the conformal expansion rate.
ModeAccel lk_rhs(double eta, const PerturbationState& state,
                 const ModeParams& params);

// delta = (a^2/9) (3 h mu' + (kappa2 - 3K)(lambda + mu)).
double density_contrast(double eta, const PerturbationState& state,
                        const ModeParams& params);

struct ContrastDerivs {
  double delta = 0.0;
  double ddelta = 0.0;
  double dddelta = 0.0;
};

// delta and its first two conformal-time derivatives, evaluated in closed
// form by substituting the equations of motion (no numerical
// differentiation).  With s = lambda + mu, kt = kappa2 - 3K, K the
// curvature and h the expansion rate:
//   delta'  = (a^2/9) [ kt lambda' + (kt - 3K - 6 h^2) mu' ]
//   delta'' = (a^2/9) [ (15 K h + 18 h^3 - h kt) mu'
//                       + kt (4K - kappa2/3 + 4 h^2) s ]
ContrastDerivs density_contrast_derivs(double eta, const PerturbationState& state,
                                       const ModeParams& params);

struct IntegrateOptions {
  double rtol = 1e-10;
  double atol = 1e-12;
  std::size_t n_out = 1001;
};

// Integrate the mode system across `domain` from the given initial state,
// sampling the solution on a uniform grid of n_out points (dense output,
// not step restriction).
Trajectory integrate(const PerturbationState& initial, const ModeParams& params,
                     const EtaInterval& domain,
                     const IntegrateOptions& opts = {});

}  // namespace frwave
