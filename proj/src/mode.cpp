#include "frwave/mode.hpp"

#include <cmath>
#include <string>

namespace frwave {

ModeParams make_mode_params(Curvature k_curv, double k) {
  if (!std::isfinite(k)) {
    throw std::invalid_argument("wave number k must be finite");
  }
  switch (k_curv) {
    case Curvature::flat:
      if (!(k > 0.0)) {
        throw std::invalid_argument("K=0 requires k > 0");
      }
      break;
    case Curvature::open:
      if (!(k >= 0.0)) {
        throw std::invalid_argument("K=-1 requires k >= 0");
      }
      break;
    case Curvature::closed:
      if (k != std::rint(k) || k < 1.0) {
        throw std::invalid_argument(
            "K=+1 requires integer k >= 2 (k = 1 admitted only as the "
            "degenerate kappa2 = 0 mode)");
      }
      break;
  }
  const double kappa2 = k * k - static_cast<double>(curvature_value(k_curv));
  return ModeParams{k_curv, k, kappa2};
}

}  // namespace frwave
