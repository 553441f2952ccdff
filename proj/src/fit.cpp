#include "frwave/fit.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace frwave {

namespace {

double uniform_spacing(const std::vector<double>& x, std::size_t min_points) {
  const std::size_t n = x.size();
  if (n < min_points) throw std::invalid_argument("grid too short");
  const double h = (x.back() - x.front()) / static_cast<double>(n - 1);
  if (!(h > 0.0)) throw std::invalid_argument("grid must be increasing");
  for (std::size_t i = 1; i < n; ++i) {
    if (std::abs(x[i] - x[i - 1] - h) > 1e-8 * h) {
      throw std::invalid_argument("grid must be uniform");
    }
  }
  return h;
}

// -<D2 v, v>/<v, v> over the interior, with a 5-point stencil at stride m.
double fd_ratio_omega2(const std::vector<double>& v, double h, std::size_t m) {
  const std::size_t n = v.size();
  const double he = static_cast<double>(m) * h;
  double num = 0.0, den = 0.0;
  for (std::size_t i = 2 * m; i + 2 * m < n; ++i) {
    const double d2 = (-v[i - 2 * m] + 16.0 * v[i - m] - 30.0 * v[i] +
                       16.0 * v[i + m] - v[i + 2 * m]) /
                      (12.0 * he * he);
    num += d2 * v[i];
    den += v[i] * v[i];
  }
  if (!(den > 0.0)) {
    throw std::runtime_error("cannot estimate a frequency: samples vanish");
  }
  return std::max(0.0, -num / den);
}

// Invert the stencil's exact sinusoid response. On a pure sinusoid the
// stencil acts pointwise as -R(theta) with theta = w he and
//   12 R he^2 = 30 - 32 cos(theta) + 2 cos(2 theta)
//             = 4 (cos(theta) - 1)(cos(theta) - 7),
// so recovering theta from the measured ratio r = R removes the
// O(theta^4) truncation bias of sqrt(r) entirely.
double stencil_frequency(double r, double he) {
  const double u = 4.0 - std::sqrt(9.0 + 3.0 * r * he * he);
  return std::acos(std::clamp(u, -1.0, 1.0)) / he;
}

}  // namespace

HarmonicFit fit_harmonic(const std::vector<double>& eta,
                         const std::vector<double>& values, double w) {
  const std::size_t n = eta.size();
  if (values.size() != n) {
    throw std::invalid_argument("grid and sample sizes differ");
  }
  if (n < 2) throw std::invalid_argument("need at least 2 samples");
  if (!(w >= 0.0)) throw std::invalid_argument("need w >= 0");

  std::vector<double> b1(n), b2(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (w == 0.0) {
      b1[i] = 1.0;
      b2[i] = eta[i];
    } else {
      b1[i] = std::cos(w * eta[i]);
      b2[i] = std::sin(w * eta[i]);
    }
  }

  double n1 = 0.0, n2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    n1 += b1[i] * b1[i];
    n2 += b2[i] * b2[i];
  }
  n1 = std::sqrt(n1);
  n2 = std::sqrt(n2);
  if (!(n1 > 0.0) || !(n2 > 0.0)) {
    throw std::invalid_argument("degenerate fit basis on this grid");
  }

  double s12 = 0.0, r1 = 0.0, r2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    s12 += (b1[i] / n1) * (b2[i] / n2);
    r1 += (b1[i] / n1) * values[i];
    r2 += (b2[i] / n2) * values[i];
  }
  const double det = 1.0 - s12 * s12;
  if (!(std::abs(det) > 1e-12)) {
    throw std::invalid_argument("fit basis is numerically collinear");
  }

  HarmonicFit fit;
  fit.A = (r1 - s12 * r2) / det / n1;
  fit.B = (r2 - s12 * r1) / det / n2;
  fit.amplitude = std::sqrt(fit.A * fit.A + fit.B * fit.B);
  double sum2 = 0.0, mx = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double res = values[i] - (fit.A * b1[i] + fit.B * b2[i]);
    sum2 += res * res;
    mx = std::max(mx, std::abs(res));
  }
  fit.rms_abs = std::sqrt(sum2 / static_cast<double>(n));
  fit.max_abs = mx;
  return fit;
}

double estimate_frequency(const std::vector<double>& eta,
                          const std::vector<double>& values) {
  if (values.size() != eta.size()) {
    throw std::invalid_argument("grid and sample sizes differ");
  }
  const double h = uniform_spacing(eta, 9);
  const std::size_t n = eta.size();
  const std::size_t m_max = std::max<std::size_t>(1, (n - 1) / 8);

  // Rough pass fixes the scale, the second pass balances the stencil's
  // O((w m h)^4) truncation against its 1/(m h)^2 noise amplification.
  const std::size_t m_rough = std::min(m_max, std::max<std::size_t>(1, n / 64));
  const double he_rough = static_cast<double>(m_rough) * h;
  const double w_rough =
      stencil_frequency(fd_ratio_omega2(values, h, m_rough), he_rough);
  std::size_t m = m_rough;
  if (w_rough > 0.0) {
    const double target = 0.15 / (w_rough * h);
    m = static_cast<std::size_t>(std::clamp(
        target, 1.0, static_cast<double>(m_max)));
  }
  const double he = static_cast<double>(m) * h;
  return stencil_frequency(fd_ratio_omega2(values, h, m), he);
}

}  // namespace frwave
