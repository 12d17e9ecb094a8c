#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "sclab/dynamics/integrators.hpp"
#include "sclab/harness/experiments.hpp"
#include "sclab/wkb/turning_points.hpp"

namespace sclab::harness {

namespace {

using dynamics::HamiltonianSystem1D;

constexpr double kDriftRatioTarget = 4.0;
constexpr double kDriftRatioTolerance = 0.5;
constexpr double kReversalTolerance = 1e-10;
constexpr double kHarmonicAverageTolerance = 1e-3;
constexpr double kErgodicTolerance = 1e-2;
constexpr double kCausticStepMultiple = 2.0;

double max_energy_error(const HamiltonianSystem1D& sys, double X0, double P0, double dt, double T) {
  const auto steps = static_cast<std::size_t>(std::llround(T / dt));
  const auto traj = dynamics::verlet_integrate(sys, X0, P0, dt, steps);
  const double E = sys.energy(X0, P0);
  double worst = 0.0;
  for (const auto& s : traj.states) worst = std::max(worst, std::abs(sys.energy(s.X, s.P) - E));
  return worst;
}

HamiltonianSystem1D quadratic(double k) {
  HamiltonianSystem1D sys;
  sys.potential = [k](double X) { return k * X * X; };
  sys.gradient = [k](double X) { return 2.0 * k * X; };
  sys.curvature = [k](double) { return 2.0 * k; };
  return sys;
}

struct ErgodicCase {
  std::string name;
  HamiltonianSystem1D sys;
  double E;
};

std::vector<ErgodicCase> ergodic_cases() {
  std::vector<ErgodicCase> out;
  HamiltonianSystem1D quartic;
  quartic.potential = [](double X) { return 0.5 * X * X + 0.25 * X * X * X * X; };
  quartic.gradient = [](double X) { return X + X * X * X; };
  out.push_back({"anharmonic", quartic, 1.0});

  HamiltonianSystem1D pendulum;
  pendulum.potential = [](double X) { return 1.0 - std::cos(X); };
  pendulum.gradient = [](double X) { return std::sin(X); };
  out.push_back({"pendulum", pendulum, 1.0});

  HamiltonianSystem1D toda;
  toda.potential = [](double X) { return std::exp(X) - 1.0 - X; };
  toda.gradient = [](double X) { return std::exp(X) - 1.0; };
  out.push_back({"exponential_wall", toda, 1.0});
  return out;
}

}  // namespace

ConvergenceReport run_dynamics_suite(const ExperimentConfig& cfg) {
  auto report = begin_report(cfg);

  // (a) Verlet energy error scales as dt^2 on lambda = X^2.
  {
    const auto sys = quadratic(1.0);
    const double coarse = max_energy_error(sys, 1.0, 0.0, 0.02, 20.0);
    const double fine = max_energy_error(sys, 1.0, 0.0, 0.01, 20.0);
    add_check(report, "verlet_drift_ratio", coarse / fine, kDriftRatioTarget - kDriftRatioTolerance,
              kDriftRatioTarget + kDriftRatioTolerance);
  }

  // (b) Time reversal.
  {
    const auto sys = quadratic(1.0);
    const double X0 = 0.7, P0 = -0.3, dt = 0.01;
    const std::size_t steps = 2000;
    const auto fwd = dynamics::verlet_integrate(sys, X0, P0, dt, steps);
    const auto end = fwd.states.back();
    const auto back = dynamics::verlet_integrate(sys, end.X, end.P, -dt, steps);
    const auto s = back.states.back();
    add_check(report, "time_reversal_error", std::max(std::abs(s.X - X0), std::abs(s.P - P0)), 0.0,
              kReversalTolerance);
  }

  // (c) Harmonic oscillator <X^2> = E over 50 periods.
  {
    const auto sys = quadratic(0.5);
    const double E = 1.0;
    const double avg = dynamics::time_average_observable(
        sys, [](double X) { return X * X; }, std::sqrt(2.0 * E), 0.0, 1e-3,
        50.0 * 2.0 * std::numbers::pi);
    add_check(report, "harmonic_time_average_error", std::abs(avg - E), 0.0, kHarmonicAverageTolerance);
  }

  // (d) Time average against the microcanonical density on confining potentials.
  {
    const auto g = [](double X) { return X * X + X; };
    for (auto& c : ergodic_cases()) {
      c.sys.box = 50.0;
      const auto interval = wkb::find_turning_points(c.sys.potential, c.E, 0.0, 10.0);
      const double md = wkb::md_expectation(g, c.sys.potential, c.E, interval);
      const double avg =
          dynamics::time_average_observable(c.sys, g, 0.0, std::sqrt(2.0 * c.E), 2e-3, 1500.0);
      const double err = std::abs(avg - md);
      add_check(report, "ergodic_identity_error_" + c.name, err, 0.0, kErgodicTolerance);
    }
  }

  // (e) First caustic of lambda = X^2 / 2 at t = pi / 2.
  {
    const auto sys = quadratic(0.5);
    const double dt = 1e-3;
    const auto traj = dynamics::monodromy_jacobian(sys, 1.0, 0.0, dt, 4000);
    const double first = traj.caustic_times.empty() ? std::numeric_limits<double>::quiet_NaN()
                                                    : traj.caustic_times.front();
    add_check(report, "first_caustic_time_error", std::abs(first - std::numbers::pi / 2.0), 0.0,
              kCausticStepMultiple * dt);
  }

  report.passed = std::all_of(report.checks.begin(), report.checks.end(),
                              [](const Check& c) { return c.passed; });
  return report;
}

}  // namespace sclab::harness
