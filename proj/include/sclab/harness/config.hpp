#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace sclab::harness {

enum class Experiment {
  example1_gap,
  example1_crossing,
  example2_caustic,
  airy_check,
  airy_observable,
  dynamics_suite
};

enum class GridScaling { fixed, sqrt, linear };
enum class KeepCenter { nearest_eigenvalue, target };

struct ExperimentConfig {
  Experiment experiment = Experiment::example1_gap;
  double E = 0.0;
  double c = 5.0;
  std::vector<double> masses;
  std::size_t grid_n = 128;
  GridScaling grid_scaling = GridScaling::linear;
  double grid_per_mass = 4.0;
  std::string observables = "default";
  std::uint64_t seed = 20240101;
  std::string output_path;
  std::size_t workers = 0;  // 0 = hardware concurrency
  KeepCenter keep_center = KeepCenter::nearest_eigenvalue;
  int expansion_order = 3;
  std::size_t bump_count = 6;
  std::optional<double> slope_min;
  std::optional<double> slope_max;

  /// Realized grid size for mass M.
  std::size_t grid_for(double M) const;
  /// Human-readable statement of the grid rule, echoed in reports.
  std::string grid_rule() const;
};

std::string to_string(Experiment e);
Experiment experiment_from_string(const std::string& s);

/// Reference configuration of an experiment with all defaults filled.
ExperimentConfig default_config(Experiment e);

/// Fields absent from `j` keep the defaults of the named experiment. Throws ConfigError
/// naming the offending field and its accepted values.
ExperimentConfig config_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const ExperimentConfig& cfg);

ExperimentConfig read_config(const std::string& path);

/// Slope window applied to the fitted log-log slopes.
std::pair<double, double> slope_window(const ExperimentConfig& cfg);

}  // namespace sclab::harness
