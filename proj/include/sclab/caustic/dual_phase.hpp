#pragma once

#include <complex>

namespace sclab::caustic {

/// Legendre dual phase of V(X) = X^2 at energy E:
/// theta*(P) = integral_0^P sqrt(E - s^2/2) ds on |P| <= sqrt(2E).
struct DualPhase {
  double E = 1.0;
  double p_max = 1.4142135623730951;  // sqrt(2E)

  double theta_star(double P) const;
  double dtheta_star(double P) const;
  double d2theta_star(double P) const;

  /// Continuation to |P| > p_max on the branch where e^{i theta*} decays:
  /// sign(P) theta*(p_max) + i J(|P|).
  std::complex<double> theta_star_continued(double P) const;

  double potential(double X) const { return X * X; }
  double potential_derivative(double X) const { return 2.0 * X; }

  /// theta(X) = X P - theta*(P) with P = sqrt(2 (E - V(X))).
  double theta(double X) const;
};

DualPhase dual_phase(double E);

}  // namespace sclab::caustic
