#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "sclab/caustic/airy.hpp"
#include "sclab/errors.hpp"
#include "sclab/harness/experiments.hpp"

namespace sclab::harness {

namespace {

constexpr std::size_t kMinimumBumps = 5;
constexpr double kObservableLo = -3.75;
constexpr double kObservableHi = -0.5;
constexpr double kWindowRamp = 0.25;
constexpr double kProfileCenter = -2.0;
constexpr double kProfileWidth = 0.2;

double smoothstep(double t) {
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 1.0;
  const double a = std::exp(-1.0 / t);
  const double b = std::exp(-1.0 / (1.0 - t));
  return a / (a + b);
}

double chi(double x) {
  const double window = smoothstep((x - kObservableLo) / kWindowRamp) *
                        smoothstep((kObservableHi - x) / kWindowRamp);
  const double d = (x - kProfileCenter) / kProfileWidth;
  return std::exp(-0.5 * d * d) * window;
}

struct Bump {
  double center;
  double width;
  double amplitude;

  double operator()(double x) const {
    const double t = (x - center) / width;
    if (std::abs(t) >= 1.0) return 0.0;
    return amplitude * std::exp(1.0 - 1.0 / (1.0 - t * t));
  }
};

std::vector<Bump> bump_battery(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> center(-3.0, 3.0);
  std::uniform_real_distribution<double> width(1.0, 2.5);
  std::uniform_real_distribution<double> amplitude(0.5, 2.0);
  std::vector<Bump> out;
  for (std::size_t i = 0; i < count; ++i) {
    const double c = center(rng);
    const double w = width(rng);
    out.push_back({c, w, amplitude(rng)});
  }
  return out;
}

ConvergenceReport mollifier_suite(const ExperimentConfig& cfg) {
  auto report = begin_report(cfg);
  const auto battery = bump_battery(cfg.seed, cfg.bump_count);
  report.points = sweep_masses(cfg, [&](double M, std::string& stage) {
    MassPoint p;
    stage = "mollifier";
    caustic::SpectralGrid grid;
    grid.n = cfg.grid_for(M);
    p.grid_n = grid.n;
    double worst_ratio = 0.0, worst_lhs = 0.0;
    int failures = 0;
    auto ratios = nlohmann::json::array();
    for (const auto& bump : battery) {
      const auto check = caustic::airy_mollifier_check(bump, M, grid);
      const double ratio = check.lhs / check.bound;
      if (!(check.lhs <= check.bound)) ++failures;
      worst_ratio = std::max(worst_ratio, ratio);
      worst_lhs = std::max(worst_lhs, check.lhs);
      ratios.push_back(ratio);
    }
    p.err_g1 = worst_ratio;
    p.err_g2 = worst_lhs;
    p.extra["failures"] = failures;
    p.extra["ratios"] = ratios;
    return p;
  });
  double failures = 0.0;
  for (const auto& p : report.points) {
    failures += p.ok() ? p.extra.at("failures").get<double>() : std::numeric_limits<double>::infinity();
  }
  fit_slopes(report);
  add_check(report, "bump_count", static_cast<double>(battery.size()),
            static_cast<double>(kMinimumBumps), std::numeric_limits<double>::infinity());
  add_check(report, "mollifier_failures", failures, 0.0, 0.0);
  report.passed = std::all_of(report.checks.begin(), report.checks.end(),
                              [](const Check& c) { return c.passed; });
  return report;
}

ConvergenceReport observable_suite(const ExperimentConfig& cfg) {
  if (cfg.observables != "default") {
    throw ConfigError("config: field 'observables' must be \"default\" for airy_observable");
  }
  auto report = begin_report(cfg);
  const auto g1 = [](double x) { return -x * chi(x); };
  report.points = sweep_masses(cfg, [&](double M, std::string& stage) {
    MassPoint p;
    stage = "observable identity";
    const auto r = caustic::airy_md_observable_identity(g1, chi, M, kObservableLo, kObservableHi);
    p.err_g1 = r.difference;
    p.err_g2 = r.difference / std::abs(r.classical_ratio);
    p.extra["quantum_ratio"] = r.quantum_ratio;
    p.extra["classical_ratio"] = r.classical_ratio;
    return p;
  });
  finish_report(report, cfg, false);
  return report;
}

}  // namespace

ConvergenceReport run_airy_suite(const ExperimentConfig& cfg) {
  if (cfg.masses.empty()) throw InvalidArgument("run_airy_suite: empty mass list");
  switch (cfg.experiment) {
    case Experiment::airy_check:
      return mollifier_suite(cfg);
    case Experiment::airy_observable:
      return observable_suite(cfg);
    default:
      throw InvalidArgument("run_airy_suite: experiment must be airy_check or airy_observable");
  }
}

}  // namespace sclab::harness
