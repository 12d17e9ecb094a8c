#include "sclab/dynamics/integrators.hpp"

#include <cmath>
#include <string>

#include "sclab/errors.hpp"

namespace sclab::dynamics {

namespace {

void reserve(Trajectory& t, std::size_t steps) {
  t.times.reserve(steps + 1);
  t.states.reserve(steps + 1);
  t.jacobian.reserve(steps + 1);
}

void record(Trajectory& t, double time, double X, double P, double J) {
  t.times.push_back(time);
  t.states.push_back({X, P});
  t.jacobian.push_back(J);
}

}  // namespace

Trajectory verlet_integrate(const HamiltonianSystem1D& sys, double X0, double P0, double dt,
                            std::size_t steps) {
  if (dt == 0.0) throw InvalidArgument("verlet_integrate: dt must be nonzero");
  Trajectory t;
  reserve(t, steps);
  double X = X0, P = P0;
  record(t, 0.0, X, P, 1.0);
  for (std::size_t n = 1; n <= steps; ++n) {
    const double Y = X + 0.5 * dt * P;
    P -= dt * sys.force_gradient(Y);
    X = Y + 0.5 * dt * P;
    record(t, dt * static_cast<double>(n), X, P, 1.0);
  }
  return t;
}

Trajectory symplectic_euler_integrate(const HamiltonianSystem1D& sys, double X0, double P0,
                                      double dt, std::size_t steps) {
  if (dt == 0.0) throw InvalidArgument("symplectic_euler_integrate: dt must be nonzero");
  Trajectory t;
  reserve(t, steps);
  double X = X0, P = P0;
  record(t, 0.0, X, P, 1.0);
  for (std::size_t n = 1; n <= steps; ++n) {
    P -= dt * sys.force_gradient(X);
    X += dt * P;
    record(t, dt * static_cast<double>(n), X, P, 1.0);
  }
  return t;
}

Trajectory monodromy_jacobian(const HamiltonianSystem1D& sys, double X0, double P0, double dt,
                              std::size_t steps) {
  if (dt == 0.0) throw InvalidArgument("monodromy_jacobian: dt must be nonzero");
  Trajectory t;
  reserve(t, steps);
  double X = X0, P = P0, dX = 1.0, dP = 0.0;
  record(t, 0.0, X, P, dX);
  for (std::size_t n = 1; n <= steps; ++n) {
    const double Y = X + 0.5 * dt * P;
    const double dY = dX + 0.5 * dt * dP;
    P -= dt * sys.force_gradient(Y);
    dP -= dt * sys.second_derivative(Y) * dY;
    X = Y + 0.5 * dt * P;
    const double dXn = dY + 0.5 * dt * dP;
    const double time = dt * static_cast<double>(n);
    if ((dX > 0.0 && dXn <= 0.0) || (dX < 0.0 && dXn >= 0.0)) {
      t.caustic_times.push_back(time - dt + dt * dX / (dX - dXn));
    }
    dX = dXn;
    record(t, time, X, P, dX);
  }
  return t;
}

double time_average_observable(const HamiltonianSystem1D& sys, const std::function<double(double)>& g,
                               double X0, double P0, double dt, double T) {
  if (!(dt > 0.0) || !(T > 0.0)) throw InvalidArgument("time_average_observable: dt and T must be positive");
  const auto steps = static_cast<std::size_t>(std::llround(T / dt));
  if (steps == 0) throw InvalidArgument("time_average_observable: T shorter than one step");
  double X = X0, P = P0;
  double sum = 0.5 * g(sys.wrap(X));
  for (std::size_t n = 1; n <= steps; ++n) {
    const double Y = X + 0.5 * dt * P;
    P -= dt * sys.force_gradient(Y);
    X = Y + 0.5 * dt * P;
    if (!std::isfinite(X) || std::abs(X) > sys.box) {
      throw UnboundedExcursion("time_average_observable: trajectory left the box |X| <= " +
                               std::to_string(sys.box) + " at t = " +
                               std::to_string(dt * static_cast<double>(n)));
    }
    sum += (n == steps ? 0.5 : 1.0) * g(sys.wrap(X));
  }
  return sum / static_cast<double>(steps);
}

std::vector<double> hitting_times(const Trajectory& traj, const std::function<double(double)>& level) {
  std::vector<double> out;
  if (traj.states.size() < 2) return out;
  double prev = level(traj.states[0].X);
  for (std::size_t k = 1; k < traj.states.size(); ++k) {
    const double cur = level(traj.states[k].X);
    if ((prev < 0.0 && cur >= 0.0) || (prev > 0.0 && cur <= 0.0)) {
      const double t0 = traj.times[k - 1], t1 = traj.times[k];
      out.push_back(t0 + (t1 - t0) * prev / (prev - cur));
    }
    prev = cur;
  }
  return out;
}

}  // namespace sclab::dynamics
