#pragma once

#include <functional>
#include <limits>
#include <vector>

namespace sclab::dynamics {

/// H(X, P) = P^2 / 2 + lambda(X) with unit mass (slow time).
struct HamiltonianSystem1D {
  std::function<double(double)> potential;
  std::function<double(double)> gradient;   // optional; central differences when empty
  std::function<double(double)> curvature;  // optional; central differences of gradient
  /// Positive period wraps positions into (wrap_origin, wrap_origin + period] for observables.
  double period = 0.0;
  double wrap_origin = 0.0;
  /// Excursion bound on the unwrapped |X| used by time averages.
  double box = std::numeric_limits<double>::infinity();

  double force_gradient(double X) const;
  double second_derivative(double X) const;
  double energy(double X, double P) const { return 0.5 * P * P + potential(X); }
  double wrap(double X) const;
};

struct PhaseState {
  double X = 0.0;
  double P = 0.0;
};

struct Trajectory {
  std::vector<double> times;
  std::vector<PhaseState> states;
  std::vector<double> jacobian;       // dX_t / dX_0; ones unless computed
  std::vector<double> caustic_times;  // sign changes of the jacobian
};

}  // namespace sclab::dynamics
