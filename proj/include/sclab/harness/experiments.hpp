#pragma once

#include <functional>
#include <string>
#include <vector>

#include "sclab/harness/config.hpp"
#include "sclab/harness/report.hpp"

namespace sclab::harness {

/// Per-mass pipeline. `stage` names the step in progress and is quoted if the step throws.
using MassPipeline = std::function<MassPoint(double M, std::string& stage)>;

/// Runs the pipeline for every mass on a bounded worker pool and returns the points in
/// mass order. A throwing mass yields a point with NaN errors and a failure status.
std::vector<MassPoint> sweep_masses(const ExperimentConfig& cfg, const MassPipeline& pipeline);

/// Config echo, grid rule and experiment name.
ConvergenceReport begin_report(const ExperimentConfig& cfg);

/// Adds the slope-window checks and sets `passed` from all checks.
void finish_report(ConvergenceReport& report, const ExperimentConfig& cfg, bool check_g2_slope);

ConvergenceReport run_example1(const ExperimentConfig& cfg);
ConvergenceReport run_example2(const ExperimentConfig& cfg);
ConvergenceReport run_airy_suite(const ExperimentConfig& cfg);
ConvergenceReport run_dynamics_suite(const ExperimentConfig& cfg);

/// Dispatches on cfg.experiment.
ConvergenceReport run_experiment(const ExperimentConfig& cfg);

}  // namespace sclab::harness
