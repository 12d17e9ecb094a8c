#include "sclab/dynamics/hamiltonian_system.hpp"

#include <cmath>

namespace sclab::dynamics {

double HamiltonianSystem1D::force_gradient(double X) const {
  if (gradient) return gradient(X);
  const double h = 1e-6 * (1.0 + std::abs(X));
  return (potential(X + h) - potential(X - h)) / (2.0 * h);
}

double HamiltonianSystem1D::second_derivative(double X) const {
  if (curvature) return curvature(X);
  const double h = 1e-5 * (1.0 + std::abs(X));
  return (force_gradient(X + h) - force_gradient(X - h)) / (2.0 * h);
}

double HamiltonianSystem1D::wrap(double X) const {
  if (!(period > 0.0)) return X;
  double r = std::fmod(X - wrap_origin, period);
  if (r <= 0.0) r += period;
  return wrap_origin + r;
}

}  // namespace sclab::dynamics
