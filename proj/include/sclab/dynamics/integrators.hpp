#pragma once

#include <cstddef>
#include <functional>

#include "sclab/dynamics/hamiltonian_system.hpp"

namespace sclab::dynamics {

/// Position (drift-kick-drift) Stormer-Verlet.
Trajectory verlet_integrate(const HamiltonianSystem1D& sys, double X0, double P0, double dt,
                            std::size_t steps);

/// Kick-drift symplectic Euler. Started from (X0 + dt P0 / 2, P0) its positions are the
/// Verlet half-step positions X_n + dt P_n / 2.
Trajectory symplectic_euler_integrate(const HamiltonianSystem1D& sys, double X0, double P0,
                                      double dt, std::size_t steps);

/// Verlet flow with the tangent pair (dX, dP), dX(0) = 1, dP(0) = 0, linearized alongside.
Trajectory monodromy_jacobian(const HamiltonianSystem1D& sys, double X0, double P0, double dt,
                              std::size_t steps);

/// Trapezoid-in-time average of g(X_t) over [0, T] along the Verlet flow.
double time_average_observable(const HamiltonianSystem1D& sys, const std::function<double(double)>& g,
                               double X0, double P0, double dt, double T);

/// Times where level(X_t) changes sign, linearly interpolated within the step.
std::vector<double> hitting_times(const Trajectory& traj, const std::function<double(double)>& level);

}  // namespace sclab::dynamics
