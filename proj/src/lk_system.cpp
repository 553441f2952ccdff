#include "frwave/lk_system.hpp"

#include <stdexcept>

#include "frwave/dopri5.hpp"

namespace frwave {

ModeAccel lk_rhs(double eta, const PerturbationState& state,
                 const ModeParams& params) {
  const double h = conformal_expansion_rate(eta, params.curvature);
  const double K = curvature_value(params.curvature);
  const double kt = params.kappa2 - 3.0 * K;
  const double s = state.lambda + state.mu;
  ModeAccel acc;
  acc.ddlambda = -2.0 * h * state.dlambda + (params.kappa2 / 3.0) * s;
  acc.ddmu = -3.0 * h * state.dmu - (2.0 / 3.0) * kt * s;
  return acc;
}

double density_contrast(double eta, const PerturbationState& state,
                        const ModeParams& params) {
  const double a = scale_factor(eta, params.curvature);
  const double h = conformal_expansion_rate(eta, params.curvature);
  const double K = curvature_value(params.curvature);
  const double kt = params.kappa2 - 3.0 * K;
  const double s = state.lambda + state.mu;
  return (a * a / 9.0) * (3.0 * h * state.dmu + kt * s);
}

ContrastDerivs density_contrast_derivs(double eta, const PerturbationState& state,
                                       const ModeParams& params) {
  const double a = scale_factor(eta, params.curvature);
  const double h = conformal_expansion_rate(eta, params.curvature);
  const double K = curvature_value(params.curvature);
  const double kt = params.kappa2 - 3.0 * K;
  const double s = state.lambda + state.mu;
  const double pref = a * a / 9.0;

  ContrastDerivs d;
  d.delta = pref * (3.0 * h * state.dmu + kt * s);
  d.ddelta = pref * (kt * state.dlambda + (kt - 3.0 * K - 6.0 * h * h) * state.dmu);
  d.dddelta = pref * ((15.0 * K * h + 18.0 * h * h * h - h * kt) * state.dmu +
                      kt * (4.0 * K - params.kappa2 / 3.0 + 4.0 * h * h) * s);
  return d;
}

Trajectory integrate(const PerturbationState& initial, const ModeParams& params,
                     const EtaInterval& domain, const IntegrateOptions& opts) {
  require_background_domain(domain.min, params.curvature);
  require_background_domain(domain.max, params.curvature);
  if (!(domain.max > domain.min)) {
    throw std::invalid_argument("need eta_max > eta_min");
  }
  if (opts.n_out < 2) throw std::invalid_argument("need n_out >= 2");

  auto rhs = [&params](double eta, const StateVec<4>& y, StateVec<4>& dy) {
    PerturbationState st{y[0], y[1], y[2], y[3]};
    const ModeAccel acc = lk_rhs(eta, st, params);
    dy[0] = y[1];
    dy[1] = acc.ddlambda;
    dy[2] = y[3];
    dy[3] = acc.ddmu;
  };

  Dopri5<4, decltype(rhs)> solver(rhs, opts.rtol, opts.atol);

  Trajectory traj;
  traj.params = params;
  traj.eta.resize(opts.n_out);
  traj.states.resize(opts.n_out);

  const StateVec<4> y0{initial.lambda, initial.dlambda, initial.mu, initial.dmu};
  solver.integrate_dense(domain.min, y0, domain.max, opts.n_out,
                         [&traj](std::size_t i, double eta, const StateVec<4>& y) {
                           traj.eta[i] = eta;
                           traj.states[i] =
                               PerturbationState{y[0], y[1], y[2], y[3]};
                         });
  traj.stats = solver.stats();
  return traj;
}

}  // namespace frwave
