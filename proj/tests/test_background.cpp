#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "frwave/background.hpp"

using namespace frwave;

namespace {

double random_eta(std::mt19937_64& gen, Curvature k) {
  const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
  const EtaInterval dom = default_eta_domain(k);
  return dom.min + u * (dom.max - dom.min);
}

}  // namespace

TEST_CASE("curvature_from_int accepts exactly -1, 0, +1") {
  CHECK(curvature_from_int(-1) == Curvature::open);
  CHECK(curvature_from_int(0) == Curvature::flat);
  CHECK(curvature_from_int(1) == Curvature::closed);
  CHECK_THROWS_AS(curvature_from_int(2), std::invalid_argument);
  CHECK_THROWS_AS(curvature_from_int(-2), std::invalid_argument);
}

TEST_CASE("curvature trig, flat branch") {
  const CurvatureTrig t = curvature_trig(2.5, Curvature::flat);
  CHECK(t.sk == 2.5);
  CHECK(t.ck == 1.0);
  CHECK(t.tk2 == 6.25);
  CHECK(t.dtk2 == 5.0);
}

TEST_CASE("curvature trig, closed branch at pi/4") {
  const CurvatureTrig t = curvature_trig(std::numbers::pi / 4.0, Curvature::closed);
  CHECK(t.sk == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
  CHECK(t.ck == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
  CHECK(t.tk2 == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(t.dtk2 == doctest::Approx(4.0).epsilon(1e-15));
}

TEST_CASE("curvature trig, open branch at 1") {
  const CurvatureTrig t = curvature_trig(1.0, Curvature::open);
  CHECK(t.sk == doctest::Approx(1.1752011936438014).epsilon(1e-15));
  CHECK(t.ck == doctest::Approx(1.5430806348152437).epsilon(1e-15));
  CHECK(t.tk2 == doctest::Approx(0.5800256583859735).epsilon(1e-15));
}

TEST_CASE("tk2 derivative matches a central-difference oracle") {
  std::mt19937_64 gen(11);
  for (const Curvature k :
       {Curvature::open, Curvature::flat, Curvature::closed}) {
    for (int trial = 0; trial < 20; ++trial) {
      const double eta = random_eta(gen, k);
      const double h = 1e-5 * std::max(1.0, std::abs(eta));
      const double f1 = curvature_trig(eta + h, k).tk2;
      const double f2 = curvature_trig(eta - h, k).tk2;
      const double f1h = curvature_trig(eta + h / 2.0, k).tk2;
      const double f2h = curvature_trig(eta - h / 2.0, k).tk2;
      const double d_h = (f1 - f2) / (2.0 * h);
      const double d_h2 = (f1h - f2h) / h;
      const double richardson = (4.0 * d_h2 - d_h) / 3.0;
      const double exact = curvature_trig(eta, k).dtk2;
      CHECK(exact == doctest::Approx(richardson).epsilon(1e-9));
    }
  }
}

TEST_CASE("sk'^2 + K sk^2 = 1 holds for all branches") {
  // Relative to the size of the squares: for K = -1 at large eta the
  // identity is a cancellation of two ~e^(2 eta)/4 terms.
  std::mt19937_64 gen(12);
  for (const Curvature k :
       {Curvature::open, Curvature::flat, Curvature::closed}) {
    const double K = curvature_value(k);
    for (int trial = 0; trial < 50; ++trial) {
      const double eta = random_eta(gen, k);
      const CurvatureTrig t = curvature_trig(eta, k);
      const double scale = std::max(1.0, t.ck * t.ck);
      CHECK(std::abs(t.ck * t.ck + K * t.sk * t.sk - 1.0) < 1e-13 * scale);
    }
  }
}

TEST_CASE("scale factor and expansion rate spot values") {
  CHECK(scale_factor(std::numbers::pi / 2.0, Curvature::closed) ==
        doctest::Approx(1.0).epsilon(1e-15));
  CHECK(conformal_expansion_rate(1.0, Curvature::flat) == 1.0);
  CHECK(conformal_expansion_rate(1.0, Curvature::closed) ==
        doctest::Approx(std::cos(1.0) / std::sin(1.0)).epsilon(1e-15));
  CHECK(conformal_expansion_rate(1.0, Curvature::open) ==
        doctest::Approx(1.0 / std::tanh(1.0)).epsilon(1e-15));
}

TEST_CASE("energy density spot values") {
  CHECK(energy_density(1.0, Curvature::flat) == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(energy_density(std::sqrt(0.5), Curvature::flat) ==
        doctest::Approx(12.0).epsilon(1e-14));
  CHECK(energy_density(std::numbers::pi / 2.0, Curvature::closed) ==
        doctest::Approx(3.0).epsilon(1e-14));
  const double s1 = std::sinh(1.0);
  CHECK(energy_density(1.0, Curvature::open) ==
        doctest::Approx(3.0 / (s1 * s1 * s1 * s1)).epsilon(1e-15));
  CHECK(energy_density(1.0, Curvature::open) ==
        doctest::Approx(1.5727).epsilon(1e-4));
}

TEST_CASE("eps a^4 = 3 identity at random eta, every curvature") {
  std::mt19937_64 gen(13);
  for (const Curvature k :
       {Curvature::open, Curvature::flat, Curvature::closed}) {
    for (int trial = 0; trial < 100; ++trial) {
      const double eta = random_eta(gen, k);
      const double a = scale_factor(eta, k);
      const double lhs = energy_density(eta, k) * a * a * a * a;
      CHECK(std::abs(lhs - 3.0) / 3.0 < 1e-12);
    }
  }
}

TEST_CASE("the literal Friedmann combination agrees where it is well conditioned") {
  // eps = 3K/a^2 + 3 (a'/a^2)^2 evaluated literally, at moderate eta.
  for (const Curvature k :
       {Curvature::open, Curvature::flat, Curvature::closed}) {
    const double K = curvature_value(k);
    const double eta = 0.8;
    const CurvatureTrig t = curvature_trig(eta, k);
    const double a = t.sk, da = t.ck;
    const double literal = 3.0 * K / (a * a) + 3.0 * (da / (a * a)) * (da / (a * a));
    CHECK(energy_density(eta, k) == doctest::Approx(literal).epsilon(1e-12));
  }
}

TEST_CASE("sound speed of the p = eps/3 fluid") {
  CHECK(sound_speed() == doctest::Approx(0.5773502691896258).epsilon(1e-15));
  CHECK(sound_speed_squared() == 1.0 / 3.0);
  CHECK(2.0 + 3.0 * sound_speed_squared() == 3.0);
  CHECK(1.0 / 3.0 + sound_speed_squared() == 2.0 / 3.0);
}

TEST_CASE("background domain boundaries") {
  CHECK(in_background_domain(0.5, Curvature::flat));
  CHECK_FALSE(in_background_domain(0.0, Curvature::flat));
  CHECK_FALSE(in_background_domain(-1.0, Curvature::open));
  CHECK_FALSE(in_background_domain(std::numbers::pi, Curvature::closed));
  CHECK(in_background_domain(3.0, Curvature::closed));
  CHECK_THROWS_AS(curvature_trig(-0.1, Curvature::flat), std::domain_error);
  CHECK_THROWS_AS(curvature_trig(3.2, Curvature::closed), std::domain_error);
  CHECK_THROWS_AS(scale_factor(0.0, Curvature::open), std::domain_error);
}

TEST_CASE("transform domain additionally excludes ck = 0") {
  CHECK(in_transform_domain(1.0, Curvature::closed));
  CHECK(in_transform_domain(2.0, Curvature::closed));
  CHECK_FALSE(in_transform_domain(0.0, Curvature::flat));
  CHECK(in_transform_domain(10.0, Curvature::open));
}

TEST_CASE("default eta windows") {
  CHECK(default_eta_domain(Curvature::flat).min == 0.1);
  CHECK(default_eta_domain(Curvature::flat).max == 10.0);
  CHECK(default_eta_domain(Curvature::open).max == 10.0);
  CHECK(default_eta_domain(Curvature::closed).max == 1.2);
}

TEST_CASE("background model validates its domain") {
  CHECK_THROWS_AS(
      make_background_model(Curvature::closed, EtaInterval{0.1, 3.5}),
      std::invalid_argument);
  CHECK_THROWS_AS(make_background_model(Curvature::flat, EtaInterval{1.0, 0.5}),
                  std::invalid_argument);
  const BackgroundModel m = make_background_model(Curvature::open);
  CHECK(m.eta_domain.min == 0.1);
}
