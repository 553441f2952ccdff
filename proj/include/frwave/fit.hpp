#pragma once
//==========================================================
// Least-squares fit of a sampled series against the two-dimensional
// solution space {cos(w eta), sin(w eta)} (or {1, eta} for w = 0), and
// an independent finite-difference frequency estimator.
//==========================================================

#include <vector>

namespace frwave {

struct HarmonicFit {
  double A = 0.0;  // coefficient of cos(w eta), or of 1 when w = 0
  double B = 0.0;  // coefficient of sin(w eta), or of eta when w = 0
  double amplitude = 0.0;  // sqrt(A^2 + B^2)
  double rms_abs = 0.0;    // absolute residuals of the fit
  double max_abs = 0.0;
};

HarmonicFit fit_harmonic(const std::vector<double>& eta,
                         const std::vector<double>& values, double w);

// Frequency of a sampled near-sinusoid on a uniform grid, from the
// least-squares ratio w^2 = -<D2 v, v>/<v, v> with D2 a strided 5-point
// centered second difference. The stride is chosen in a second pass so
// that w * stride * h sits where the stencil's truncation error and its
// noise amplification are both small; relative accuracy ~1e-6 for data
// that is sinusoidal to ~1e-8. Throws std::invalid_argument for
// non-uniform or too-short grids and std::runtime_error for identically
// zero data.
double estimate_frequency(const std::vector<double>& eta,
                          const std::vector<double>& values);

}  // namespace frwave
