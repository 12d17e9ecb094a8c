#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <limits>
#include <thread>

#include "sclab/errors.hpp"
#include "sclab/harness/experiments.hpp"

namespace sclab::harness {

std::vector<MassPoint> sweep_masses(const ExperimentConfig& cfg, const MassPipeline& pipeline) {
  const std::size_t count = cfg.masses.size();
  std::vector<MassPoint> points(count);
  std::size_t workers = cfg.workers != 0 ? cfg.workers : std::thread::hardware_concurrency();
  workers = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(count, 1));

  // Largest masses first so the slowest jobs start early.
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t t = next++; t < count; t = next++) {
      const std::size_t i = count - 1 - t;
      const double M = cfg.masses[i];
      const auto start = std::chrono::steady_clock::now();
      std::string stage = "setup";
      MassPoint p;
      try {
        p = pipeline(M, stage);
      } catch (const std::exception& e) {
        p = MassPoint{};
        p.err_g1 = std::numeric_limits<double>::quiet_NaN();
        p.err_g2 = std::numeric_limits<double>::quiet_NaN();
        p.E0 = std::numeric_limits<double>::quiet_NaN();
        p.status = "failed at " + stage + ": " + e.what();
      }
      p.M = M;
      if (p.grid_n == 0) p.grid_n = cfg.grid_for(M);
      p.wall_time_s =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      points[i] = std::move(p);
    }
  };

  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return points;
}

ConvergenceReport begin_report(const ExperimentConfig& cfg) {
  ConvergenceReport r;
  r.experiment = to_string(cfg.experiment);
  r.config = config_to_json(cfg);
  r.grid_rule = cfg.grid_rule();
  return r;
}

void finish_report(ConvergenceReport& report, const ExperimentConfig& cfg, bool check_g2_slope) {
  fit_slopes(report);
  const auto [lo, hi] = slope_window(cfg);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  add_check(report, "slope_g1", report.slope_g1.value_or(nan), lo, hi);
  if (check_g2_slope) add_check(report, "slope_g2", report.slope_g2.value_or(nan), lo, hi);
  report.passed = std::all_of(report.checks.begin(), report.checks.end(),
                              [](const Check& c) { return c.passed; });
}

ConvergenceReport run_experiment(const ExperimentConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  ConvergenceReport r;
  switch (cfg.experiment) {
    case Experiment::example1_gap:
    case Experiment::example1_crossing:
      r = run_example1(cfg);
      break;
    case Experiment::example2_caustic:
      r = run_example2(cfg);
      break;
    case Experiment::airy_check:
    case Experiment::airy_observable:
      r = run_airy_suite(cfg);
      break;
    case Experiment::dynamics_suite:
      r = run_dynamics_suite(cfg);
      break;
  }
  r.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace sclab::harness
