#include "frwave/background.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace frwave {

Curvature curvature_from_int(int value) {
  switch (value) {
    case -1: return Curvature::open;
    case 0: return Curvature::flat;
    case 1: return Curvature::closed;
    default:
      throw std::invalid_argument("curvature must be -1, 0 or +1, got " +
                                  std::to_string(value));
  }
}

bool in_background_domain(double eta, Curvature k) {
  if (!(eta > 0.0)) return false;
  if (k == Curvature::closed && !(eta < std::numbers::pi)) return false;
  return std::isfinite(eta);
}

void require_background_domain(double eta, Curvature k) {
  if (!in_background_domain(eta, k)) {
    throw std::domain_error("eta = " + std::to_string(eta) +
                            " outside the background domain for K = " +
                            std::to_string(curvature_value(k)) +
                            (k == Curvature::closed ? " (need 0 < eta < pi)"
                                                    : " (need eta > 0)"));
  }
}

bool in_transform_domain(double eta, Curvature k) {
  if (!in_background_domain(eta, k)) return false;
  if (k == Curvature::closed && std::cos(eta) == 0.0) return false;
  return true;
}

EtaInterval default_eta_domain(Curvature k) {
  if (k == Curvature::closed) return {0.1, 1.2};
  return {0.1, 10.0};
}

BackgroundModel make_background_model(Curvature k) {
  return {k, default_eta_domain(k)};
}

BackgroundModel make_background_model(Curvature k, EtaInterval domain) {
  if (!(domain.min < domain.max) || !in_background_domain(domain.min, k) ||
      !in_background_domain(domain.max, k)) {
    throw std::invalid_argument("invalid eta domain [" +
                                std::to_string(domain.min) + ", " +
                                std::to_string(domain.max) + "] for K = " +
                                std::to_string(curvature_value(k)));
  }
  return {k, domain};
}

CurvatureTrig curvature_trig(double eta, Curvature k) {
  require_background_domain(eta, k);
  CurvatureTrig t{};
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
  const double ratio = t.sk / t.ck;
  t.tk2 = ratio * ratio;
  t.dtk2 = 2.0 * t.sk / (t.ck * t.ck * t.ck);
  return t;
}

double scale_factor(double eta, Curvature k) {
  return curvature_trig(eta, k).sk;
}

double conformal_expansion_rate(double eta, Curvature k) {
  const CurvatureTrig t = curvature_trig(eta, k);
  return t.ck / t.sk;
}

double energy_density(double eta, Curvature k) {
  const double a = scale_factor(eta, k);
  const double a2 = a * a;
  return 3.0 / (a2 * a2);
}

double sound_speed() { return std::sqrt(1.0 / 3.0); }

double sound_speed_squared() { return 1.0 / 3.0; }

}  // namespace frwave
