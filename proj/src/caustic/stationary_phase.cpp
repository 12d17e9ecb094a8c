#include "sclab/caustic/stationary_phase.hpp"

#include <cmath>
#include <vector>

#include "sclab/errors.hpp"
#include "sclab/numerics/polyfit.hpp"

namespace sclab::caustic {

namespace {

constexpr int kSamples = 41;
constexpr std::size_t kDegree = 10;
constexpr double kStencilFraction = 0.4;

std::complex<double> amplitude(double X0, const DualPhase& dp, double M, double Ps, int k) {
  const double a = dp.d2theta_star(Ps);
  if (std::abs(a) < 1e-6) {
    throw DegenerateStationaryPoint("stationary point too close to a turning point");
  }
  const auto phi = [&](double P) { return -X0 * P + dp.theta_star(P); };
  const double half = kStencilFraction * std::min(dp.p_max - std::abs(Ps), 2.0 * std::abs(Ps));
  if (!(half > 0.0)) throw DegenerateStationaryPoint("empty sampling stencil around the stationary point");

  std::vector<double> ps(kSamples), ys(kSamples);
  const double base = phi(Ps);
  for (int i = 0; i < kSamples; ++i) {
    const double p = -half + 2.0 * half * i / (kSamples - 1);
    const double ratio = 2.0 * (phi(Ps + p) - base) / a;
    ps[i] = p;
    ys[i] = (p > 0.0 ? 1.0 : (p < 0.0 ? -1.0 : 0.0)) * std::sqrt(std::max(ratio, 0.0));
  }
  const auto inverse = numerics::lsq_polyfit(ys, ps, kDegree);

  const double lam = std::sqrt(M);
  const std::complex<double> step(0.0, 1.0 / (2.0 * lam * a));
  std::complex<double> sum = 0.0;
  std::complex<double> power = 1.0;
  double factorial = 1.0;
  for (int j = 0; j <= k; ++j) {
    if (j > 0) {
      power *= step;
      factorial *= j;
    }
    sum += power / factorial * inverse.derivative(0.0, 2 * j + 1);
  }
  const double sgn = a > 0.0 ? 1.0 : -1.0;
  return std::polar(1.0 / std::sqrt(std::abs(0.5 * a)), sgn * M_PI / 4.0) * sum;
}

}  // namespace

std::complex<double> StationaryPhase::ubar(double theta_x) const {
  const double lam = std::sqrt(M);
  return std::polar(1.0, -lam * theta_x) * psi_plus + std::polar(1.0, lam * theta_x) * psi_minus;
}

StationaryPhase stationary_phase_psis(double X0, const DualPhase& dp, double M, int k) {
  if (k < 0 || k > 3) throw InvalidArgument("stationary_phase_psis: order must be in 0..3");
  if (!(M > 0.0)) throw InvalidArgument("stationary_phase_psis: M must be positive");
  const double kin = dp.E - dp.potential(X0);
  if (!(kin > 0.0)) throw NonpositiveKineticEnergy("stationary_phase_psis: X0 outside the allowed region");
  StationaryPhase sp;
  sp.P0 = std::sqrt(2.0 * kin);
  sp.theta = dp.theta(X0);
  sp.scale = std::sqrt(M_PI) * std::pow(M, -0.25);
  sp.M = M;
  sp.order = k;
  sp.psi_plus = amplitude(X0, dp, M, sp.P0, k);
  sp.psi_minus = amplitude(X0, dp, M, -sp.P0, k);
  return sp;
}

}  // namespace sclab::caustic
