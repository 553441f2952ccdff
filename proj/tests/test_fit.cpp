#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "frwave/fit.hpp"

using namespace frwave;

namespace {

std::vector<double> uniform_grid(double lo, double hi, std::size_t n) {
  std::vector<double> x(n);
  const double h = (hi - lo) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) x[i] = lo + static_cast<double>(i) * h;
  x.back() = hi;
  return x;
}

std::vector<double> sampled(const std::vector<double>& eta, double A, double B,
                            double w) {
  std::vector<double> v(eta.size());
  for (std::size_t i = 0; i < eta.size(); ++i) {
    v[i] = A * std::cos(w * eta[i]) + B * std::sin(w * eta[i]);
  }
  return v;
}

}  // namespace

TEST_CASE("harmonic fit recovers exact coefficients") {
  const std::vector<double> eta = uniform_grid(0.1, 10.0, 501);
  const double w = 0.9;
  const std::vector<double> v = sampled(eta, 1.25, -0.75, w);
  const HarmonicFit fit = fit_harmonic(eta, v, w);
  CHECK(fit.A == doctest::Approx(1.25).epsilon(1e-12));
  CHECK(fit.B == doctest::Approx(-0.75).epsilon(1e-12));
  CHECK(fit.amplitude ==
        doctest::Approx(std::hypot(1.25, 0.75)).epsilon(1e-12));
  CHECK(fit.rms_abs < 1e-13);
  CHECK(fit.max_abs < 1e-12);
}

TEST_CASE("zero-frequency fit uses the affine basis") {
  const std::vector<double> eta = uniform_grid(0.1, 5.0, 201);
  std::vector<double> v(eta.size());
  for (std::size_t i = 0; i < eta.size(); ++i) v[i] = 2.0 + 3.0 * eta[i];
  const HarmonicFit fit = fit_harmonic(eta, v, 0.0);
  CHECK(fit.A == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(fit.B == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(fit.max_abs < 1e-12);
}

TEST_CASE("harmonic fit degrades gracefully under small noise") {
  const std::vector<double> eta = uniform_grid(0.1, 10.0, 1001);
  std::vector<double> v = sampled(eta, 0.6, 0.4, 1.7);
  std::mt19937_64 gen(5);
  for (double& x : v) {
    const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
    x += 1e-8 * (2.0 * u - 1.0);
  }
  const HarmonicFit fit = fit_harmonic(eta, v, 1.7);
  CHECK(fit.A == doctest::Approx(0.6).epsilon(1e-7));
  CHECK(fit.B == doctest::Approx(0.4).epsilon(1e-7));
  CHECK(fit.rms_abs < 1e-7);
}

TEST_CASE("fit input validation") {
  CHECK_THROWS_AS(fit_harmonic({0.0, 1.0}, {1.0}, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(fit_harmonic({}, {}, 1.0), std::invalid_argument);
}

TEST_CASE("frequency estimation on clean sinusoids") {
  const std::vector<double> eta = uniform_grid(0.1, 10.0, 2001);
  for (const double w : {0.3, 1.0, 2.9}) {
    const std::vector<double> v = sampled(eta, 0.8, -0.5, w);
    const double est = estimate_frequency(eta, v);
    CHECK(std::abs(est - w) / w < 1e-6);
  }
}

TEST_CASE("frequency estimation with less than one period in the window") {
  // Mirrors the short closed-universe window: w eta spans well under a
  // full cycle.
  const std::vector<double> eta = uniform_grid(0.1, 1.2, 2001);
  const double w = 1.0;
  const std::vector<double> v = sampled(eta, 1.0, 0.3, w);
  const double est = estimate_frequency(eta, v);
  CHECK(std::abs(est - w) / w < 1e-5);
}

TEST_CASE("frequency of non-oscillatory data is near zero") {
  const std::vector<double> eta = uniform_grid(0.1, 10.0, 1001);
  std::vector<double> v(eta.size());
  for (std::size_t i = 0; i < eta.size(); ++i) v[i] = 0.2 + 0.05 * eta[i];
  CHECK(estimate_frequency(eta, v) < 1e-3);
}

TEST_CASE("frequency estimation error handling") {
  const std::vector<double> eta = uniform_grid(0.1, 10.0, 101);
  const std::vector<double> zero(eta.size(), 0.0);
  CHECK_THROWS_AS(estimate_frequency(eta, zero), std::runtime_error);

  std::vector<double> ragged = uniform_grid(0.1, 10.0, 101);
  ragged[50] += 0.01;
  CHECK_THROWS_AS(estimate_frequency(ragged, sampled(ragged, 1.0, 0.0, 1.0)),
                  std::invalid_argument);

  const std::vector<double> tiny = uniform_grid(0.1, 1.0, 5);
  CHECK_THROWS_AS(estimate_frequency(tiny, std::vector<double>(5, 1.0)),
                  std::invalid_argument);
}

TEST_CASE("frequency estimation tolerates sampling noise") {
  const std::vector<double> eta = uniform_grid(0.1, 10.0, 2001);
  const double w = 0.57735;
  std::vector<double> v = sampled(eta, 1.0, 0.25, w);
  std::mt19937_64 gen(9);
  for (double& x : v) {
    const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
    x += 1e-8 * (2.0 * u - 1.0);
  }
  const double est = estimate_frequency(eta, v);
  CHECK(std::abs(est - w) / w < 1e-4);
}
