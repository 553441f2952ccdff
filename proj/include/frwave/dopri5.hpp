#pragma once
//==========================================================
// Embedded Dormand-Prince 5(4) integrator with the standard
// 4th-order dense-output interpolant.
//
// Error control: err = rms(h * e_i k_i / sc_i) with
// sc_i = atol + rtol * max(|y0_i|, |y1_i|); step accepted when
// err <= 1; new step h * clamp(0.9 err^(-1/5), 0.2, 10).
//==========================================================

#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>

#include "frwave/mode.hpp"

namespace frwave {

template <std::size_t N>
using StateVec = std::array<double, N>;

namespace dopri5_detail {

// Published DOPRI5 tableau.
inline constexpr double c2 = 1.0 / 5.0, c3 = 3.0 / 10.0, c4 = 4.0 / 5.0,
                        c5 = 8.0 / 9.0;
inline constexpr double a21 = 1.0 / 5.0;
inline constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
inline constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0, a43 = 32.0 / 9.0;
inline constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0,
                        a53 = 64448.0 / 6561.0, a54 = -212.0 / 729.0;
inline constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0,
                        a63 = 46732.0 / 5247.0, a64 = 49.0 / 176.0,
                        a65 = -5103.0 / 18656.0;
inline constexpr double a71 = 35.0 / 384.0, a73 = 500.0 / 1113.0,
                        a74 = 125.0 / 192.0, a75 = -2187.0 / 6784.0,
                        a76 = 11.0 / 84.0;
// e = b5 - b4 (5th-order weights minus the embedded 4th-order weights).
inline constexpr double e1 = 71.0 / 57600.0, e3 = -71.0 / 16695.0,
                        e4 = 71.0 / 1920.0, e5 = -17253.0 / 339200.0,
                        e6 = 22.0 / 525.0, e7 = -1.0 / 40.0;
// Dense-output coefficients.
inline constexpr double d1 = -12715105075.0 / 11282082432.0,
                        d3 = 87487479700.0 / 32700410799.0,
                        d4 = -10690763975.0 / 1880347072.0,
                        d5 = 701980252875.0 / 199316789632.0,
                        d6 = -1453857185.0 / 822651844.0,
                        d7 = 69997945.0 / 29380423.0;

}  // namespace dopri5_detail

// Rhs signature: void(double x, const StateVec<N>& y, StateVec<N>& dydx).
template <std::size_t N, typename Rhs>
class Dopri5 {
 public:
  Dopri5(Rhs rhs, double rtol, double atol) : rhs_(rhs), rtol_(rtol), atol_(atol) {
    if (!(rtol > 0.0) || !(atol > 0.0)) {
      throw std::invalid_argument("rtol and atol must be positive");
    }
  }

  const IntegratorStats& stats() const { return stats_; }

  // Integrate from (x0, y0) to x1 > x0, emitting the solution at the n_out
  // equispaced points x0 + i*(x1-x0)/(n_out-1) via emit(i, x_i, y_i).
  // Interior points are filled from the dense interpolant of the accepted
  // step containing them; endpoints are the exact step values.
  template <typename Emit>
  void integrate_dense(double x0, const StateVec<N>& y0, double x1,
                       std::size_t n_out, Emit&& emit) {
    if (!(x1 > x0)) throw std::invalid_argument("need x1 > x0");
    if (n_out < 2) throw std::invalid_argument("need n_out >= 2");
    stats_ = IntegratorStats{};
    stats_.rtol = rtol_;
    stats_.atol = atol_;

    const double span = x1 - x0;
    const double dx_out = span / static_cast<double>(n_out - 1);
    std::size_t next_out = 0;
    emit(next_out, x0, y0);
    ++next_out;

    double x = x0;
    StateVec<N> y = y0;
    StateVec<N> k1;
    rhs_(x, y, k1);
    ++stats_.rhs_evals;
    double h = initial_step(x0, y, k1, span);

    bool last_rejected = false;
    while (x < x1) {
      if (x + h > x1) h = x1 - x;
      if (!(h > min_step(x))) {
        throw std::runtime_error("step size underflow at eta = " +
                                 std::to_string(x) +
                                 " (last valid point of the integration)");
      }
      StateVec<N> y1, k7, err_vec;
      std::array<StateVec<N>, 5> ks;
      step(x, y, k1, h, y1, k7, ks, err_vec);
      stats_.rhs_evals += 6;

      double err = 0.0;
      for (std::size_t i = 0; i < N; ++i) {
        const double sc =
            atol_ + rtol_ * std::max(std::abs(y[i]), std::abs(y1[i]));
        const double q = h * err_vec[i] / sc;
        err += q * q;
      }
      err = std::sqrt(err / static_cast<double>(N));

      if (err <= 1.0) {
        ++stats_.accepted;
        prepare_dense(y, y1, k1, k7, ks, h);
        const double x_new = x + h;
        while (next_out < n_out) {
          const double x_out = x0 + static_cast<double>(next_out) * dx_out;
          if (x_out > x_new && next_out != n_out - 1) break;
          if (next_out == n_out - 1) {
            if (x_new < x1) break;
            emit(next_out, x1, y1);
          } else {
            emit(next_out, x_out, dense_eval((x_out - x) / h));
          }
          ++next_out;
        }
        x = x_new;
        y = y1;
        k1 = k7;  // FSAL
        double fac = 0.9 * std::pow(err > 0.0 ? err : 1e-10, -0.2);
        fac = std::min(last_rejected ? 1.0 : 10.0, std::max(0.2, fac));
        h *= fac;
        last_rejected = false;
      } else {
        ++stats_.rejected;
        h *= std::max(0.2, 0.9 * std::pow(err, -0.2));
        last_rejected = true;
      }
    }
  }

  StateVec<N> integrate_to(double x0, const StateVec<N>& y0, double x1) {
    StateVec<N> out{};
    integrate_dense(x0, y0, x1, 2,
                    [&](std::size_t, double, const StateVec<N>& y) { out = y; });
    return out;
  }

  // Fixed-step driver (no error control); used by order-verification tests.
  StateVec<N> integrate_fixed(double x0, const StateVec<N>& y0, double x1,
                              std::size_t n_steps) {
    if (n_steps == 0) throw std::invalid_argument("need n_steps > 0");
    const double h = (x1 - x0) / static_cast<double>(n_steps);
    StateVec<N> y = y0, k1;
    double x = x0;
    rhs_(x, y, k1);
    for (std::size_t s = 0; s < n_steps; ++s) {
      StateVec<N> y1, k7, err_vec;
      std::array<StateVec<N>, 5> ks;
      step(x, y, k1, h, y1, k7, ks, err_vec);
      x = x0 + static_cast<double>(s + 1) * h;
      y = y1;
      k1 = k7;
    }
    return y;
  }

 private:
  static double min_step(double x) {
    return 16.0 * std::numeric_limits<double>::epsilon() *
           std::max(std::abs(x), 1.0);
  }

  // Hairer-style starting step estimate.
  double initial_step(double x0, const StateVec<N>& y0, const StateVec<N>& f0,
                      double span) {
    double d0 = 0.0, d1 = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
      const double sc = atol_ + rtol_ * std::abs(y0[i]);
      d0 += (y0[i] / sc) * (y0[i] / sc);
      d1 += (f0[i] / sc) * (f0[i] / sc);
    }
    d0 = std::sqrt(d0 / N);
    d1 = std::sqrt(d1 / N);
    double h0 = (d0 < 1e-5 || d1 < 1e-5) ? 1e-6 * span : 0.01 * d0 / d1;
    h0 = std::min(h0, span);

    StateVec<N> y1, f1;
    for (std::size_t i = 0; i < N; ++i) y1[i] = y0[i] + h0 * f0[i];
    rhs_(x0 + h0, y1, f1);
    ++stats_.rhs_evals;
    double d2 = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
      const double sc = atol_ + rtol_ * std::abs(y0[i]);
      const double df = (f1[i] - f0[i]) / sc;
      d2 += df * df;
    }
    d2 = std::sqrt(d2 / N) / h0;

    const double dm = std::max(d1, d2);
    double h1 = (dm <= 1e-15) ? std::max(1e-6 * span, h0 * 1e-3)
                              : std::pow(0.01 / dm, 0.2);
    return std::min({100.0 * h0, h1, span});
  }

  void step(double x, const StateVec<N>& y, const StateVec<N>& k1, double h,
            StateVec<N>& y1, StateVec<N>& k7, std::array<StateVec<N>, 5>& ks,
            StateVec<N>& err_vec) {
    using namespace dopri5_detail;
    StateVec<N>&k2 = ks[0], &k3 = ks[1], &k4 = ks[2], &k5 = ks[3], &k6 = ks[4];
    StateVec<N> yt;

    for (std::size_t i = 0; i < N; ++i) yt[i] = y[i] + h * a21 * k1[i];
    rhs_(x + c2 * h, yt, k2);
    for (std::size_t i = 0; i < N; ++i)
      yt[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
    rhs_(x + c3 * h, yt, k3);
    for (std::size_t i = 0; i < N; ++i)
      yt[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
    rhs_(x + c4 * h, yt, k4);
    for (std::size_t i = 0; i < N; ++i)
      yt[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
    rhs_(x + c5 * h, yt, k5);
    for (std::size_t i = 0; i < N; ++i)
      yt[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] +
                          a64 * k4[i] + a65 * k5[i]);
    rhs_(x + h, yt, k6);
    for (std::size_t i = 0; i < N; ++i)
      y1[i] = y[i] + h * (a71 * k1[i] + a73 * k3[i] + a74 * k4[i] +
                          a75 * k5[i] + a76 * k6[i]);
    rhs_(x + h, y1, k7);

    for (std::size_t i = 0; i < N; ++i)
      err_vec[i] = e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                   e6 * k6[i] + e7 * k7[i];
  }

  void prepare_dense(const StateVec<N>& y0, const StateVec<N>& y1,
                     const StateVec<N>& k1, const StateVec<N>& k7,
                     const std::array<StateVec<N>, 5>& ks, double h) {
    using namespace dopri5_detail;
    const StateVec<N>&k3 = ks[1], &k4 = ks[2], &k5 = ks[3], &k6 = ks[4];
    for (std::size_t i = 0; i < N; ++i) {
      const double ydiff = y1[i] - y0[i];
      const double bspl = h * k1[i] - ydiff;
      rcont_[0][i] = y0[i];
      rcont_[1][i] = ydiff;
      rcont_[2][i] = bspl;
      rcont_[3][i] = ydiff - h * k7[i] - bspl;
      rcont_[4][i] = h * (d1 * k1[i] + d3 * k3[i] + d4 * k4[i] + d5 * k5[i] +
                          d6 * k6[i] + d7 * k7[i]);
    }
  }

  StateVec<N> dense_eval(double theta) const {
    const double t1 = 1.0 - theta;
    StateVec<N> out;
    for (std::size_t i = 0; i < N; ++i) {
      out[i] = rcont_[0][i] +
               theta * (rcont_[1][i] +
                        t1 * (rcont_[2][i] +
                              theta * (rcont_[3][i] + t1 * rcont_[4][i])));
    }
    return out;
  }

  Rhs rhs_;
  double rtol_;
  double atol_;
  IntegratorStats stats_;
  std::array<StateVec<N>, 5> rcont_{};
};

}  // namespace frwave
