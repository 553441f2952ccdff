#include "frwave/transform.hpp"

#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <string>

namespace frwave {

namespace {

void require_transform_domain(double eta, Curvature k) {
  if (!in_transform_domain(eta, k)) {
    throw std::domain_error("eta = " + std::to_string(eta) +
                            " outside the transform domain for K = " +
                            std::to_string(curvature_value(k)));
  }
}

// sk, ck, tk2 without the domain gate; valid for eta >= 0 (and eta < pi/2
// for the closed branch, which reconstruction enforces separately).
struct RawTrig {
  double sk, ck, tk2;
};

RawTrig raw_trig(double eta, Curvature k) {
  RawTrig t{};
  switch (k) {
    case Curvature::open:
      t.sk = std::sinh(eta);
      t.ck = std::cosh(eta);
      break;
    case Curvature::flat:
      t.sk = eta;
      t.ck = 1.0;
      break;
    case Curvature::closed:
      t.sk = std::sin(eta);
      t.ck = std::cos(eta);
      break;
  }
  const double r = t.sk / t.ck;
  t.tk2 = r * r;
  return t;
}

// I(eta) = int_0^eta tk2.
double gauge_integral(double eta, Curvature k) {
  switch (k) {
    case Curvature::open: return eta - std::tanh(eta);
    case Curvature::flat: return eta * eta * eta / 3.0;
    case Curvature::closed: return std::tan(eta) - eta;
  }
  return 0.0;
}

struct KernelFactors {
  double t, dt, ddt;  // tk2 and derivatives
  double w, dw, ddw;  // w = tk2 ck and derivatives
};

KernelFactors kernel_factors(double eta, Curvature k) {
  const CurvatureTrig trig = curvature_trig(eta, k);
  const double K = static_cast<double>(curvature_value(k));
  const double sk = trig.sk, ck = trig.ck;
  KernelFactors f{};
  f.t = trig.tk2;
  f.dt = trig.dtk2;
  f.ddt = 2.0 * (ck * ck + 3.0 * K * sk * sk) / (ck * ck * ck * ck);
  f.w = f.t * ck;
  f.dw = f.dt * ck - K * f.t * sk;
  f.ddw = f.ddt * ck - 2.0 * K * f.dt * sk - K * f.t * ck;
  return f;
}

GaugeDerivs quotient_derivs(double u, double du, double ddu,
                            const KernelFactors& f) {
  const double w = f.w, dw = f.dw, ddw = f.ddw;
  GaugeDerivs g{};
  g.g = u / w;
  const double num1 = du * w - u * dw;
  g.dg = num1 / (w * w);
  g.ddg = ((ddu * w - u * ddw) * w - 2.0 * dw * num1) / (w * w * w);
  return g;
}

void require_uniform(const std::vector<double>& x) {
  const std::size_t n = x.size();
  if (n < 4) throw std::invalid_argument("quadrature grid needs >= 4 points");
  const double h = (x.back() - x.front()) / static_cast<double>(n - 1);
  if (!(h > 0.0)) throw std::invalid_argument("grid must be increasing");
  for (std::size_t i = 1; i < n; ++i) {
    if (std::abs(x[i] - x[i - 1] - h) > 1e-8 * h) {
      throw std::invalid_argument("quadrature grid must be uniform");
    }
  }
}

// Cumulative integral on a uniform grid with spacing h, in place over f.
std::vector<double> cumulative_uniform(const std::vector<double>& f, double h) {
  const std::size_t n = f.size();
  std::vector<double> out(n);
  out[0] = 0.0;
  out[1] = out[0] + h * (9.0 * f[0] + 19.0 * f[1] - 5.0 * f[2] + f[3]) / 24.0;
  for (std::size_t j = 2; j + 1 < n; ++j) {
    out[j] = out[j - 1] +
             h * (-f[j - 2] + 13.0 * f[j - 1] + 13.0 * f[j] - f[j + 1]) / 24.0;
  }
  out[n - 1] = out[n - 2] + h *
                                (f[n - 4] - 5.0 * f[n - 3] + 19.0 * f[n - 2] +
                                 9.0 * f[n - 1]) /
                                24.0;
  return out;
}

void require_one_branch(const std::vector<double>& eta, Curvature k) {
  if (eta.empty() || !(eta.front() > 0.0)) {
    throw std::domain_error("reconstruction grid must start at eta > 0");
  }
  if (k == Curvature::closed) {
    const double half_pi = std::numbers::pi / 2.0;
    if (!(eta.back() < half_pi)) {
      throw std::domain_error(
          "closed-universe reconstruction requires the grid inside "
          "(0, pi/2), clear of the ck = 0 singularity");
    }
  }
}

}  // namespace

PsiCoeffs psi_coefficients(double eta, Curvature k) {
  require_transform_domain(eta, k);
  const CurvatureTrig t = curvature_trig(eta, k);
  const double K = static_cast<double>(curvature_value(k));
  PsiCoeffs c{};
  c.P = 2.0 / (t.sk * t.ck) - 2.0 * K * t.sk / t.ck;
  c.Q = -2.0 / (t.sk * t.sk) - K;
  return c;
}

double psi_of_state(double eta, const PerturbationState& state,
                    const ModeParams& params) {
  const ContrastDerivs d = density_contrast_derivs(eta, state, params);
  return psi_value(d, psi_coefficients(eta, params.curvature));
}

GaugePair gauge_pair(double eta, Curvature k) {
  require_transform_domain(eta, k);
  const RawTrig t = raw_trig(eta, k);
  const double w = t.tk2 * t.ck;
  return {gauge_integral(eta, k) / w, 1.0 / w};
}

GaugeDerivs gauge_g1_derivs(double eta, Curvature k) {
  require_transform_domain(eta, k);
  const KernelFactors f = kernel_factors(eta, k);
  return quotient_derivs(gauge_integral(eta, k), f.t, f.dt, f);
}

GaugeDerivs gauge_g2_derivs(double eta, Curvature k) {
  require_transform_domain(eta, k);
  const KernelFactors f = kernel_factors(eta, k);
  return quotient_derivs(1.0, 0.0, 0.0, f);
}

std::vector<double> cumulative_quadrature(const std::vector<double>& x,
                                          const std::vector<double>& f) {
  if (x.size() != f.size()) {
    throw std::invalid_argument("grid and sample sizes differ");
  }
  require_uniform(x);
  const double h = (x.back() - x.front()) / static_cast<double>(x.size() - 1);
  return cumulative_uniform(f, h);
}

std::vector<double> reconstruct_delta(const std::vector<double>& eta,
                                      const std::vector<double>& psi,
                                      Curvature k, double c1, double c2) {
  if (eta.size() != psi.size()) {
    throw std::invalid_argument("grid and sample sizes differ");
  }
  require_one_branch(eta, k);
  require_uniform(eta);
  const std::size_t n = eta.size();

  std::vector<double> integrand(n);
  for (std::size_t i = 0; i < n; ++i) {
    integrand[i] = raw_trig(eta[i], k).ck * psi[i];
  }
  std::vector<double> F = cumulative_quadrature(eta, integrand);
  for (double& v : F) v += c1;

  for (std::size_t i = 0; i < n; ++i) {
    integrand[i] = raw_trig(eta[i], k).tk2 * F[i];
  }
  std::vector<double> G = cumulative_quadrature(eta, integrand);

  std::vector<double> delta(n);
  for (std::size_t i = 0; i < n; ++i) {
    const RawTrig t = raw_trig(eta[i], k);
    delta[i] = (c2 + G[i]) / (t.tk2 * t.ck);
  }
  return delta;
}

std::vector<double> reconstruct_delta_analytic(
    const std::vector<double>& eta, const std::function<double(double)>& psi,
    Curvature k, double c1, double c2) {
  require_one_branch(eta, k);
  require_uniform(eta);
  const std::size_t n = eta.size();

  // Bridge [0, eta0] on an internal uniform grid fine enough that the
  // fourth-order quadrature error there is negligible next to the output
  // grid's own.
  const double eta0 = eta.front();
  const double h_out = (eta.back() - eta.front()) / static_cast<double>(n - 1);
  const std::size_t n_pre =
      std::max<std::size_t>(64, static_cast<std::size_t>(eta0 / h_out) + 4);
  const double h_pre = eta0 / static_cast<double>(n_pre - 1);

  std::vector<double> pre_eta(n_pre), pre_f(n_pre);
  for (std::size_t i = 0; i < n_pre; ++i) {
    pre_eta[i] = static_cast<double>(i) * h_pre;
    pre_f[i] = raw_trig(pre_eta[i], k).ck * psi(pre_eta[i]);
  }
  std::vector<double> pre_F = cumulative_uniform(pre_f, h_pre);

  std::vector<double> out_f(n);
  for (std::size_t i = 0; i < n; ++i) {
    out_f[i] = raw_trig(eta[i], k).ck * psi(eta[i]);
  }
  std::vector<double> F = cumulative_uniform(out_f, h_out);
  const double F_offset = c1 + pre_F.back();
  for (double& v : F) v += F_offset;
  for (std::size_t i = 0; i < n_pre; ++i) pre_F[i] += c1;

  for (std::size_t i = 0; i < n_pre; ++i) {
    pre_f[i] = raw_trig(pre_eta[i], k).tk2 * pre_F[i];
  }
  std::vector<double> pre_G = cumulative_uniform(pre_f, h_pre);

  for (std::size_t i = 0; i < n; ++i) {
    out_f[i] = raw_trig(eta[i], k).tk2 * F[i];
  }
  std::vector<double> G = cumulative_uniform(out_f, h_out);
  const double G_offset = c2 + pre_G.back();

  std::vector<double> delta(n);
  for (std::size_t i = 0; i < n; ++i) {
    const RawTrig t = raw_trig(eta[i], k);
    delta[i] = (G_offset + G[i]) / (t.tk2 * t.ck);
  }
  return delta;
}

GaugeProjection project_onto_gauge(const std::vector<double>& eta,
                                   const std::vector<double>& values,
                                   Curvature k) {
  const std::size_t n = eta.size();
  if (n != values.size()) {
    throw std::invalid_argument("grid and sample sizes differ");
  }
  if (n < 2) throw std::invalid_argument("need at least 2 samples");

  std::vector<double> g1(n), g2(n);
  double n1 = 0.0, n2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const GaugePair g = gauge_pair(eta[i], k);
    g1[i] = g.g1;
    g2[i] = g.g2;
    n1 += g.g1 * g.g1;
    n2 += g.g2 * g.g2;
  }
  n1 = std::sqrt(n1);
  n2 = std::sqrt(n2);
  if (!(n1 > 0.0) || !(n2 > 0.0)) {
    throw std::runtime_error("degenerate gauge basis on this grid");
  }

  // Normal equations in the column-normalized basis.
  double s12 = 0.0, b1 = 0.0, b2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double u1 = g1[i] / n1, u2 = g2[i] / n2;
    s12 += u1 * u2;
    b1 += u1 * values[i];
    b2 += u2 * values[i];
  }
  const double det = 1.0 - s12 * s12;
  if (!(std::abs(det) > 1e-12)) {
    throw std::runtime_error("gauge basis is numerically collinear");
  }
  const double a1 = (b1 - s12 * b2) / det;
  const double a2 = (b2 - s12 * b1) / det;

  GaugeProjection proj;
  proj.c1 = a1 / n1;
  proj.c2 = a2 / n2;
  proj.projection.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    proj.projection[i] = proj.c1 * g1[i] + proj.c2 * g2[i];
  }
  return proj;
}

}  // namespace frwave
