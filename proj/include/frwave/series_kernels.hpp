#pragma once
//==========================================================
// Grid-sized pointwise kernels with OpenMP-parallel and serial
// execution paths. Every output element depends only on its own
// grid point, so both paths produce bitwise-identical results;
// tests assert that and the benchmark compares their throughput.
//==========================================================

#include <vector>

#include "frwave/lk_system.hpp"
#include "frwave/transform.hpp"
#include "frwave/wavefield.hpp"

namespace frwave::kernels {

enum class Exec { serial, parallel };

// Exec::parallel degrades to the serial loop when OpenMP is not compiled in.
bool parallel_available();

struct ContrastPsiSeries {
  std::vector<double> delta;
  std::vector<double> ddelta;
  std::vector<double> dddelta;
  std::vector<double> psi;
};

// Contrast derivatives and transform value at every trajectory sample.
ContrastPsiSeries contrast_psi_series(const Trajectory& traj, Exec exec);

// Gauge kernel pair at every grid point.
void gauge_pair_series(const std::vector<double>& eta, Curvature k, Exec exec,
                       std::vector<double>& g1, std::vector<double>& g2);

// Radial eigenfunction profile on a chi grid.
std::vector<double> radial_mode_series(Curvature curv, double k, int l,
                                       const std::vector<double>& chi,
                                       Exec exec);

}  // namespace frwave::kernels
