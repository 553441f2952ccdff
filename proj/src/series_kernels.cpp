#include "frwave/series_kernels.hpp"

#include <cstddef>
#include <exception>

namespace frwave::kernels {

bool parallel_available() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

namespace {

// Runs body(i) for i in [0, n); the parallel path splits iterations across
// threads. body must touch only index i of any shared output.
template <typename Body>
void for_each_index(std::size_t n, Exec exec, Body&& body) {
#ifdef _OPENMP
  if (exec == Exec::parallel) {
    const std::ptrdiff_t sn = static_cast<std::ptrdiff_t>(n);
    std::exception_ptr failure;
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < sn; ++i) {
      try {
        body(static_cast<std::size_t>(i));
      } catch (...) {
#pragma omp critical(frwave_kernel_failure)
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
    return;
  }
#else
  (void)exec;
#endif
  for (std::size_t i = 0; i < n; ++i) body(i);
}

}  // namespace

ContrastPsiSeries contrast_psi_series(const Trajectory& traj, Exec exec) {
  const std::size_t n = traj.eta.size();
  ContrastPsiSeries s;
  s.delta.resize(n);
  s.ddelta.resize(n);
  s.dddelta.resize(n);
  s.psi.resize(n);
  for_each_index(n, exec, [&](std::size_t i) {
    const ContrastDerivs d =
        density_contrast_derivs(traj.eta[i], traj.states[i], traj.params);
    s.delta[i] = d.delta;
    s.ddelta[i] = d.ddelta;
    s.dddelta[i] = d.dddelta;
    s.psi[i] = psi_value(d, psi_coefficients(traj.eta[i], traj.params.curvature));
  });
  return s;
}

void gauge_pair_series(const std::vector<double>& eta, Curvature k, Exec exec,
                       std::vector<double>& g1, std::vector<double>& g2) {
  const std::size_t n = eta.size();
  g1.resize(n);
  g2.resize(n);
  for_each_index(n, exec, [&](std::size_t i) {
    const GaugePair g = gauge_pair(eta[i], k);
    g1[i] = g.g1;
    g2[i] = g.g2;
  });
}

std::vector<double> radial_mode_series(Curvature curv, double k, int l,
                                       const std::vector<double>& chi,
                                       Exec exec) {
  std::vector<double> out(chi.size());
  for_each_index(chi.size(), exec, [&](std::size_t i) {
    out[i] = radial_mode(curv, k, l, chi[i]);
  });
  return out;
}

}  // namespace frwave::kernels
