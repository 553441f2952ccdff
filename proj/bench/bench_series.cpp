//==========================================================
// Throughput comparison of the serial and OpenMP execution paths of the
// grid-sized kernels. Results are bitwise identical by construction;
// this only measures time. Wall-clock numbers, best of three runs.
//==========================================================

#include <chrono>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "frwave/lk_system.hpp"
#include "frwave/series_kernels.hpp"

namespace {

using frwave::Curvature;
using frwave::kernels::Exec;

template <typename F>
double best_ms(F&& fn) {
  fn();  // warm caches and the OpenMP runtime
  double best = 1e300;
  for (int rep = 0; rep < 3; ++rep) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const double ms =
        std::chrono::duration<double, std::milli>(
            std::chrono::steady_clock::now() - t0)
            .count();
    if (ms < best) best = ms;
  }
  return best;
}

void row(const char* name, std::size_t n, double serial_ms, double parallel_ms) {
  std::printf("%-22s %9zu %12.2f %12.2f %9.2fx\n", name, n, serial_ms,
              parallel_ms, serial_ms / parallel_ms);
}

std::vector<double> uniform_grid(double lo, double hi, std::size_t n) {
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = lo + (hi - lo) * double(i) / double(n - 1);
  }
  return x;
}

}  // namespace

int main() {
  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  std::printf("parallel path available: %s, max threads %d\n",
              frwave::kernels::parallel_available() ? "yes" : "no", threads);
  std::printf("%-22s %9s %12s %12s %9s\n", "kernel", "n", "serial ms",
              "parallel ms", "speedup");

  {
    const frwave::ModeParams params =
        frwave::make_mode_params(Curvature::flat, 1.0);
    frwave::IntegrateOptions opts;
    opts.n_out = 1'000'001;
    const frwave::Trajectory traj = frwave::integrate(
        {0.3, -0.1, 0.2, 0.4}, params, frwave::default_eta_domain(Curvature::flat),
        opts);
    frwave::kernels::ContrastPsiSeries out;
    const double s = best_ms(
        [&] { out = frwave::kernels::contrast_psi_series(traj, Exec::serial); });
    const double p = best_ms([&] {
      out = frwave::kernels::contrast_psi_series(traj, Exec::parallel);
    });
    row("contrast_psi_series", opts.n_out, s, p);
  }

  {
    const std::vector<double> eta = uniform_grid(0.2, 10.0, 4'000'001);
    std::vector<double> g1, g2;
    const double s = best_ms([&] {
      frwave::kernels::gauge_pair_series(eta, Curvature::open, Exec::serial, g1,
                                         g2);
    });
    const double p = best_ms([&] {
      frwave::kernels::gauge_pair_series(eta, Curvature::open, Exec::parallel,
                                         g1, g2);
    });
    row("gauge_pair_series", eta.size(), s, p);
  }

  {
    const std::vector<double> chi = uniform_grid(0.1, 2.5, 4'000'001);
    std::vector<double> phi;
    const double s = best_ms([&] {
      phi = frwave::kernels::radial_mode_series(Curvature::open, 2.0, 1, chi,
                                                Exec::serial);
    });
    const double p = best_ms([&] {
      phi = frwave::kernels::radial_mode_series(Curvature::open, 2.0, 1, chi,
                                                Exec::parallel);
    });
    row("radial_mode_series", chi.size(), s, p);
  }

  return 0;
}
