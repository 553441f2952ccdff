#pragma once
//==========================================================
// Exact FRW background for the radiation equation of state
// p = eps/3, in conformal time eta (units c = 1, 8 pi G = 1).
//
// The scale factor is a(eta) = sin(sqrt(K) eta)/sqrt(K); every
// sqrt(K)-trigonometric expression is implemented as three explicit
// real branches over K in {-1, 0, +1}, never as complex arithmetic.
//==========================================================

#include <stdexcept>

namespace frwave {

enum class Curvature : int { open = -1, flat = 0, closed = +1 };

// Only -1, 0, +1 are constructible; anything else throws std::invalid_argument.
Curvature curvature_from_int(int value);

constexpr int curvature_value(Curvature k) { return static_cast<int>(k); }

// Real branches of the sqrt(K)-trigonometry, for K = {-1, 0, +1}:
//   sk   = sin(sqrt(K) eta)/sqrt(K)   -> {sinh eta, eta, sin eta}
//   ck   = cos(sqrt(K) eta)           -> {cosh eta, 1, cos eta}
//   tk2  = tan(sqrt(K) eta)^2 / K     -> {tanh^2 eta, eta^2, tan^2 eta}
//   dtk2 = d(tk2)/deta = 2 sk / ck^3  (uses ck^2 + K sk^2 = 1)
struct CurvatureTrig {
  double sk;
  double ck;
  double tk2;
  double dtk2;
};

struct EtaInterval {
  double min;
  double max;
};

// Background domain: zeros of a(eta) excluded. K = +1: (0, pi); else eta > 0.
bool in_background_domain(double eta, Curvature k);
void require_background_domain(double eta, Curvature k);  // throws std::domain_error

// Transform-safe domain additionally excludes zeros of ck (eta = pi/2 for K = +1).
bool in_transform_domain(double eta, Curvature k);

// Default conformal-time windows: K = +1 -> [0.1, 1.2] (inside (0, pi/2));
// K in {0, -1} -> [0.1, 10]. Clear of the a = 0 singularity and, for the
// closed universe, of the cos(eta) = 0 transform singularity.
EtaInterval default_eta_domain(Curvature k);

struct BackgroundModel {
  Curvature curvature;
  EtaInterval eta_domain;
};

BackgroundModel make_background_model(Curvature k);
BackgroundModel make_background_model(Curvature k, EtaInterval domain);

CurvatureTrig curvature_trig(double eta, Curvature k);

// a(eta) = sk; strictly positive on the domain.
double scale_factor(double eta, Curvature k);

// a'(eta)/a(eta) = ck/sk: {coth eta, 1/eta, cot eta} for K = {-1, 0, +1}.
double conformal_expansion_rate(double eta, Curvature k);

// eps = 3K/a^2 + 3 (a'/a^2)^2. Since a'^2 + K a^2 = 1 for this scale
// factor, this reduces to eps = 3/a^4, which is what we evaluate (the
// literal form loses ~8 digits to cancellation at large eta for K = -1).
double energy_density(double eta, Curvature k);

// Sound velocity of the p = eps/3 fluid: the constant 1/sqrt(3).
double sound_speed();
// c^2, exactly 1.0/3.0 in the representation used.
double sound_speed_squared();

}  // namespace frwave
