#pragma once
//==========================================================
// Per-eigenmode parameters and dynamical state.
//
// Modes are labelled by the wave number k; kappa2 = k^2 - K is the
// magnitude of the Beltrami-Laplace eigenvalue, Lap Y = -(k^2 - K) Y.
//==========================================================

#include <cstdint>
#include <vector>

#include "frwave/background.hpp"

namespace frwave {

struct ModeParams {
  Curvature curvature;
  double k;
  double kappa2;  // k^2 - K, always >= 0
};

// Spectrum per curvature:
//   K =  0: k > 0
//   K = -1: k >= 0            (kappa2 = k^2 + 1 >= 1)
//   K = +1: integer k >= 2    (kappa2 in {3, 8, 15, ...});
//           k = 1 (kappa2 = 0) admitted as the degenerate mode only.
// Violations throw std::invalid_argument naming the rule.
ModeParams make_mode_params(Curvature k_curv, double k);

// Mode amplitudes of the synchronous-gauge metric functions,
// mu = C and lambda = -Lap E, with their conformal-time derivatives.
struct PerturbationState {
  double lambda = 0.0;
  double dlambda = 0.0;
  double mu = 0.0;
  double dmu = 0.0;
};

struct IntegratorStats {
  std::int64_t accepted = 0;
  std::int64_t rejected = 0;
  std::int64_t rhs_evals = 0;
  double rtol = 0.0;
  double atol = 0.0;
};

// Dense solution samples on an equispaced, strictly increasing eta grid.
struct Trajectory {
  ModeParams params;
  std::vector<double> eta;
  std::vector<PerturbationState> states;
  IntegratorStats stats;
};

}  // namespace frwave
