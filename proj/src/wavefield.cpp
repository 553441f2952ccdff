#include "frwave/wavefield.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace frwave {

namespace {

void require_subcurvature(double k, Curvature curv, bool strict) {
  const double K = static_cast<double>(curvature_value(curv));
  const double kappa2 = k * k - K;
  if (kappa2 < 0.0 || (strict && kappa2 == 0.0)) {
    throw std::domain_error(
        "supercurvature wave number: k^2 - K = " + std::to_string(kappa2) +
        (strict ? " (need k^2 - K > 0)" : " (need k^2 - K >= 0)") +
        "; no propagating acoustic mode");
  }
}

struct ChiTrig {
  double s, c;
};

ChiTrig chi_trig(double chi, Curvature curv) {
  switch (curv) {
    case Curvature::open: return {std::sinh(chi), std::cosh(chi)};
    case Curvature::flat: return {chi, 1.0};
    case Curvature::closed: return {std::sin(chi), std::cos(chi)};
  }
  return {0.0, 0.0};
}

void require_chi_domain(double chi, Curvature curv) {
  const bool ok = std::isfinite(chi) && chi >= 0.0 &&
                  (curv != Curvature::closed || chi < std::numbers::pi);
  if (!ok) {
    throw std::domain_error("chi = " + std::to_string(chi) +
                            " outside the radial domain for K = " +
                            std::to_string(curvature_value(curv)));
  }
}

}  // namespace

double omega(double k, Curvature curv) {
  require_subcurvature(k, curv, false);
  if (curv == Curvature::flat) return k / std::sqrt(3.0);
  const double K = static_cast<double>(curvature_value(curv));
  return std::sqrt((k * k - K) / 3.0);
}

double group_velocity(double k, Curvature curv) {
  require_subcurvature(k, curv, true);
  if (curv == Curvature::flat) return 1.0 / std::sqrt(3.0);
  const double K = static_cast<double>(curvature_value(curv));
  return k / (std::sqrt(3.0) * std::sqrt(k * k - K));
}

double analytic_psi(double A, double B, double omega, double eta) {
  if (!(omega >= 0.0)) {
    throw std::invalid_argument("omega must be >= 0");
  }
  if (omega == 0.0) return A + B * eta;
  return A * std::cos(omega * eta) + B * std::sin(omega * eta);
}

double radial_mode(Curvature curv, double k, int l, double chi) {
  require_chi_domain(chi, curv);
  if (!(k > 0.0)) throw std::invalid_argument("need k > 0");
  const double K = static_cast<double>(curvature_value(curv));
  const double kappa2 = k * k - K;
  if (kappa2 < 0.0) {
    throw std::domain_error("supercurvature wave number: k^2 - K < 0");
  }

  const ChiTrig t = chi_trig(chi, curv);
  switch (l) {
    case 0:
      // sin(k chi)/(k sK); near 0 the quartic-accurate series
      // 1 - kappa2 chi^2/6.
      if (chi < 1e-6) return 1.0 - kappa2 * chi * chi / 6.0;
      return std::sin(k * chi) / (k * t.s);
    case 1: {
      if (kappa2 == 0.0) {
        throw std::invalid_argument(
            "l = 1 undefined for the degenerate kappa2 = 0 mode");
      }
      // The two numerator terms agree to O(chi^3), so the closed form
      // loses ~(kappa chi)^-2 digits to cancellation near the origin.
      // Below kappa chi = 0.03 use the series
      //   chi (1 + c2 chi^2 + c4 chi^4),
      // whose truncation there is smaller than the cancellation above it.
      if (kappa2 * chi * chi < 9e-4) {
        const double c2 = -(3.0 * k * k - 7.0 * K) / 30.0;
        const double c4 =
            (3.0 * k * k * k * k - 18.0 * k * k * K + 31.0 * K * K) / 840.0;
        const double x2 = chi * chi;
        return chi * (1.0 + (c2 + c4 * x2) * x2);
      }
      const double num = std::sin(k * chi) * t.c - k * std::cos(k * chi) * t.s;
      return (3.0 / kappa2) * num / (k * t.s * t.s);
    }
    default:
      throw std::invalid_argument("radial_mode: l = " + std::to_string(l) +
                                  " not implemented (supported: l in {0, 1})");
  }
}

std::vector<double> radial_laplacian_fd(const std::vector<double>& chi,
                                        const std::vector<double>& samples,
                                        Curvature curv) {
  const std::size_t n = chi.size();
  if (samples.size() != n) {
    throw std::invalid_argument("grid and sample sizes differ");
  }
  if (n < 5) {
    throw std::invalid_argument("radial_laplacian_fd needs >= 5 grid points");
  }
  const double h = (chi.back() - chi.front()) / static_cast<double>(n - 1);
  if (!(h > 0.0)) throw std::invalid_argument("grid must be increasing");
  for (std::size_t i = 1; i < n; ++i) {
    if (std::abs(chi[i] - chi[i - 1] - h) > 1e-8 * h) {
      throw std::invalid_argument("grid must be uniform");
    }
  }

  std::vector<double> out(n - 2);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    require_chi_domain(chi[i], curv);
    const ChiTrig t = chi_trig(chi[i], curv);
    if (t.s == 0.0) {
      throw std::domain_error("grid touches the coordinate singularity");
    }
    const double d2 = (samples[i + 1] - 2.0 * samples[i] + samples[i - 1]) / (h * h);
    const double d1 = (samples[i + 1] - samples[i - 1]) / (2.0 * h);
    out[i - 1] = d2 + 2.0 * (t.c / t.s) * d1;
  }
  return out;
}

}  // namespace frwave
