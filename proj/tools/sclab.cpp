#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sclab/errors.hpp"
#include "sclab/harness/config.hpp"
#include "sclab/harness/experiments.hpp"
#include "sclab/harness/report.hpp"

namespace {

using namespace sclab::harness;

constexpr int kExitPass = 0;
constexpr int kExitThreshold = 1;
constexpr int kExitError = 2;

struct Overrides {
  std::string config_path;
  std::string out;
  std::string format = "csv";
  std::optional<double> E;
  std::optional<double> c;
  std::vector<double> masses;
  std::optional<std::size_t> grid_n;
  std::optional<std::string> grid_scaling;
  std::optional<double> grid_per_mass;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> workers;
  std::optional<int> order;
  std::optional<std::size_t> bumps;
  std::optional<std::string> keep_center;
};

void add_common(CLI::App* app, Overrides& o) {
  app->add_option("--config", o.config_path, "JSON experiment configuration")->check(CLI::ExistingFile);
  app->add_option("--out", o.out, "Report path (stdout when omitted)");
  app->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"csv", "json"}));
  app->add_option("--E", o.E, "Target energy");
  app->add_option("--masses", o.masses, "Strictly increasing mass list")->delimiter(',');
  app->add_option("--grid-n", o.grid_n, "Base grid size (>= 128)");
  app->add_option("--grid-scaling", o.grid_scaling, "Grid rule")
      ->check(CLI::IsMember({"fixed", "sqrt", "linear"}));
  app->add_option("--grid-per-mass", o.grid_per_mass, "Points per unit mass for the linear rule");
  app->add_option("--seed", o.seed, "Seed of the test-function battery");
  app->add_option("--workers", o.workers, "Worker threads for the mass sweep (0 = all cores)");
}

ExperimentConfig resolve(Experiment fallback, const std::vector<Experiment>& allowed,
                         const Overrides& o) {
  nlohmann::json j;
  if (!o.config_path.empty()) {
    j = config_to_json(read_config(o.config_path));
  } else {
    j = config_to_json(default_config(fallback));
  }
  if (o.E) j["E"] = *o.E;
  if (o.c) j["c"] = *o.c;
  if (!o.masses.empty()) j["masses"] = o.masses;
  if (o.grid_n) j["grid_n"] = *o.grid_n;
  if (o.grid_scaling) j["grid_scaling"] = *o.grid_scaling;
  if (o.grid_per_mass) j["grid_per_mass"] = *o.grid_per_mass;
  if (o.seed) j["seed"] = *o.seed;
  if (o.workers) j["workers"] = *o.workers;
  if (o.order) j["expansion_order"] = *o.order;
  if (o.bumps) j["bump_count"] = *o.bumps;
  if (o.keep_center) j["keep_center"] = *o.keep_center;
  if (!o.out.empty()) j["output_path"] = o.out;
  auto cfg = config_from_json(j);
  if (!allowed.empty()) {
    bool ok = false;
    for (auto e : allowed) ok = ok || e == cfg.experiment;
    if (!ok) {
      throw sclab::ConfigError("config: experiment '" + to_string(cfg.experiment) +
                               "' does not belong to this subcommand");
    }
  }
  return cfg;
}

void summarize(const ConvergenceReport& r) {
  std::fprintf(stderr, "%s: %s (%.2f s)\n", r.experiment.c_str(), r.passed ? "passed" : "FAILED",
               r.wall_time_s);
  for (const auto& p : r.points) {
    if (!p.ok()) std::fprintf(stderr, "  M = %g: %s\n", p.M, p.status.c_str());
  }
  for (const auto& c : r.checks) {
    std::fprintf(stderr, "  %-32s %-5s %.6g in [%g, %g]\n", c.name.c_str(), c.passed ? "ok" : "FAIL",
                 c.value, c.lo, c.hi);
  }
}

int emit(const ExperimentConfig& cfg, const Overrides& o) {
  const auto report = run_experiment(cfg);
  const auto format = o.format == "json" ? ReportFormat::json : ReportFormat::csv;
  if (cfg.output_path.empty()) {
    std::cout << (format == ReportFormat::json ? report_to_json(report).dump(2) + "\n"
                                               : report_to_csv(report));
  } else {
    write_report(report, cfg.output_path, format);
  }
  summarize(report);
  return report.passed ? kExitPass : kExitThreshold;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Semiclassical convergence experiments"};
  app.require_subcommand(1);

  Overrides o;
  std::string example1_case = "gap";
  std::string airy_mode = "check";

  auto* ex1 = app.add_subcommand("example1", "Two-state WKB convergence sweep");
  add_common(ex1, o);
  ex1->add_option("--case", example1_case, "gap (c=5, E=0) or crossing (c=0, E=1.2)")
      ->check(CLI::IsMember({"gap", "crossing"}));
  ex1->add_option("--c", o.c, "Gap constant");
  ex1->add_option("--keep-center", o.keep_center, "Center of the kept window")
      ->check(CLI::IsMember({"E0", "E"}));

  auto* ex2 = app.add_subcommand("example2", "Caustic state convergence sweep");
  add_common(ex2, o);
  ex2->add_option("--order", o.order, "Stationary-phase expansion order (0..3)");
  ex2->add_option("--keep-center", o.keep_center, "Center of the kept window")
      ->check(CLI::IsMember({"E0", "E"}));

  auto* airy = app.add_subcommand("airy", "Airy mollifier bound or observable identity");
  add_common(airy, o);
  airy->add_option("--mode", airy_mode, "check or observable")->check(CLI::IsMember({"check", "observable"}));
  airy->add_option("--bumps", o.bumps, "Size of the seeded bump battery");

  auto* dyn = app.add_subcommand("dynamics", "Symplectic integrator property suite");
  add_common(dyn, o);

  auto* sweep = app.add_subcommand("sweep", "Run the experiment named in a configuration file");
  add_common(sweep, o);
  sweep->get_option("--config")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitError;
  }

  try {
    if (ex1->parsed()) {
      const auto fallback = example1_case == "gap" ? Experiment::example1_gap : Experiment::example1_crossing;
      auto cfg = resolve(fallback, {Experiment::example1_gap, Experiment::example1_crossing}, o);
      return emit(cfg, o);
    }
    if (ex2->parsed()) return emit(resolve(Experiment::example2_caustic, {Experiment::example2_caustic}, o), o);
    if (airy->parsed()) {
      const auto fallback = airy_mode == "check" ? Experiment::airy_check : Experiment::airy_observable;
      return emit(resolve(fallback, {Experiment::airy_check, Experiment::airy_observable}, o), o);
    }
    if (dyn->parsed()) return emit(resolve(Experiment::dynamics_suite, {Experiment::dynamics_suite}, o), o);
    return emit(resolve(Experiment::example1_gap, {}, o), o);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitError;
  }
}
