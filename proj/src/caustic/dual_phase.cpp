#include "sclab/caustic/dual_phase.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sclab/errors.hpp"

namespace sclab::caustic {

namespace {

void check_domain(const DualPhase& dp, double P) {
  if (std::abs(P) > dp.p_max * (1.0 + 1e-14)) {
    throw InvalidArgument("dual phase evaluated at P = " + std::to_string(P) +
                          " outside [-sqrt(2E), sqrt(2E)]");
  }
}

}  // namespace

DualPhase dual_phase(double E) {
  if (!(E > 0.0)) throw InvalidArgument("dual_phase: E must be positive");
  DualPhase dp;
  dp.E = E;
  dp.p_max = std::sqrt(2.0 * E);
  return dp;
}

double DualPhase::theta_star(double P) const {
  check_domain(*this, P);
  const double r = std::clamp(P / p_max, -1.0, 1.0);
  return E / std::sqrt(2.0) * (std::asin(r) + r * std::sqrt(1.0 - r * r));
}

double DualPhase::dtheta_star(double P) const {
  check_domain(*this, P);
  return std::sqrt(std::max(E - 0.5 * P * P, 0.0));
}

double DualPhase::d2theta_star(double P) const {
  check_domain(*this, P);
  return -P / (2.0 * std::sqrt(std::max(E - 0.5 * P * P, 0.0)));
}

std::complex<double> DualPhase::theta_star_continued(double P) const {
  const double s = std::abs(P);
  if (s <= p_max) return theta_star(P);
  const double t = std::sqrt(0.5 * s * s - E);
  const double J = 0.5 * s * t - E / std::sqrt(2.0) * std::log((s / std::sqrt(2.0) + t) / std::sqrt(E));
  const double edge = E / std::sqrt(2.0) * (M_PI / 2.0);
  return {std::copysign(edge, P), J};
}

double DualPhase::theta(double X) const {
  const double k = E - potential(X);
  if (!(k > 0.0)) throw NonpositiveKineticEnergy("theta: X outside the classically allowed region");
  const double P = std::sqrt(2.0 * k);
  return X * P - theta_star(std::min(P, p_max));
}

}  // namespace sclab::caustic
