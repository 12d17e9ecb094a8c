#pragma once

#include <complex>

#include "sclab/caustic/dual_phase.hpp"

namespace sclab::caustic {

/// Stationary-phase amplitudes at X0 such that
/// u(X0) ~ scale (e^{-i sqrt(M) theta} psi_plus + e^{i sqrt(M) theta} psi_minus).
struct StationaryPhase {
  std::complex<double> psi_plus;
  std::complex<double> psi_minus;
  double theta = 0.0;      // theta(X0)
  double P0 = 0.0;         // sqrt(2 (E - V(X0)))
  double scale = 0.0;      // sqrt(pi) M^(-1/4)
  double M = 1.0;
  int order = 0;

  /// e^{-i sqrt(M) theta_x} psi_plus + e^{i sqrt(M) theta_x} psi_minus.
  std::complex<double> ubar(double theta_x) const;
};

/// Expansion terms j = 0..k, each (i / (2 sqrt(M) theta*''))^j / j! d^{2j}/dY^{2j} (dp/dY) at Y = 0;
/// p(Y) is the degree-10 least-squares inverse of Y(p) = sgn(p) sqrt(2 (phi(Ps+p) - phi(Ps)) / theta*'').
StationaryPhase stationary_phase_psis(double X0, const DualPhase& dp, double M, int k);

}  // namespace sclab::caustic
