#include "sclab/harness/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "sclab/errors.hpp"

namespace sclab::harness {

namespace {

using nlohmann::json;

const std::vector<std::pair<Experiment, std::string>>& experiment_names() {
  static const std::vector<std::pair<Experiment, std::string>> names = {
      {Experiment::example1_gap, "example1_gap"},
      {Experiment::example1_crossing, "example1_crossing"},
      {Experiment::example2_caustic, "example2_caustic"},
      {Experiment::airy_check, "airy_check"},
      {Experiment::airy_observable, "airy_observable"},
      {Experiment::dynamics_suite, "dynamics_suite"}};
  return names;
}

const std::vector<std::string>& known_fields() {
  static const std::vector<std::string> fields = {
      "experiment", "E",       "c",          "masses",        "grid_n",
      "grid_scaling", "grid_per_mass", "observables", "seed", "output_path",
      "workers",    "keep_center", "expansion_order", "bump_count", "slope_min", "slope_max"};
  return fields;
}

std::string joined(const std::vector<std::string>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i];
  return s;
}

[[noreturn]] void bad(const std::string& field, const std::string& accepted) {
  throw ConfigError("config field '" + field + "': expected " + accepted);
}

double number(const json& j, const std::string& field) {
  if (!j.at(field).is_number()) bad(field, "a number");
  return j.at(field).get<double>();
}

std::size_t count(const json& j, const std::string& field, std::size_t minimum) {
  const auto& v = j.at(field);
  if (!v.is_number_integer() || v.get<long long>() < static_cast<long long>(minimum)) {
    bad(field, "an integer >= " + std::to_string(minimum));
  }
  return v.get<std::size_t>();
}

bool needs_masses(Experiment e) { return e != Experiment::dynamics_suite; }

}  // namespace

std::string to_string(Experiment e) {
  for (const auto& [k, name] : experiment_names()) {
    if (k == e) return name;
  }
  return "unknown";
}

Experiment experiment_from_string(const std::string& s) {
  for (const auto& [k, name] : experiment_names()) {
    if (name == s) return k;
  }
  std::vector<std::string> accepted;
  for (const auto& p : experiment_names()) accepted.push_back(p.second);
  bad("experiment", "one of {" + joined(accepted) + "}, got '" + s + "'");
}

std::size_t ExperimentConfig::grid_for(double M) const {
  std::size_t n = grid_n;
  switch (grid_scaling) {
    case GridScaling::fixed:
      break;
    case GridScaling::sqrt:
      n = std::max(grid_n, static_cast<std::size_t>(16.0 * std::ceil(std::sqrt(M))));
      break;
    case GridScaling::linear:
      n = std::max(grid_n, static_cast<std::size_t>(std::ceil(grid_per_mass * M)));
      break;
  }
  return n + (n % 2);
}

std::string ExperimentConfig::grid_rule() const {
  std::ostringstream os;
  switch (grid_scaling) {
    case GridScaling::fixed:
      os << "n = " << grid_n;
      break;
    case GridScaling::sqrt:
      os << "n = max(" << grid_n << ", 16*ceil(sqrt(M))), rounded up to even";
      break;
    case GridScaling::linear:
      os << "n = max(" << grid_n << ", ceil(" << grid_per_mass << "*M)), rounded up to even";
      break;
  }
  return os.str();
}

ExperimentConfig default_config(Experiment e) {
  ExperimentConfig cfg;
  cfg.experiment = e;
  switch (e) {
    case Experiment::example1_gap:
      cfg.E = 0.0;
      cfg.c = 5.0;
      cfg.masses = {90, 181, 362, 724, 1448, 2896, 5792};
      cfg.grid_per_mass = 4.0;
      break;
    case Experiment::example1_crossing:
      cfg.E = 1.2;
      cfg.c = 0.0;
      cfg.masses = {90, 181, 362, 724, 1448, 2896, 5792};
      cfg.grid_per_mass = 4.0;
      break;
    case Experiment::example2_caustic:
      cfg.E = 1.0;
      cfg.c = 0.0;
      cfg.masses = {200, 400, 800, 1600, 3200, 6400};
      cfg.grid_per_mass = 2.0;
      break;
    case Experiment::airy_check:
      cfg.masses = {50, 100, 400};
      cfg.grid_scaling = GridScaling::fixed;
      cfg.grid_n = 4096;
      break;
    case Experiment::airy_observable:
      cfg.masses = {100, 200, 400, 800};
      cfg.grid_scaling = GridScaling::fixed;
      break;
    case Experiment::dynamics_suite:
      cfg.grid_scaling = GridScaling::fixed;
      break;
  }
  return cfg;
}

std::pair<double, double> slope_window(const ExperimentConfig& cfg) {
  const bool caustic = cfg.experiment == Experiment::example2_caustic;
  return {cfg.slope_min.value_or(caustic ? -1.4 : -1.3), cfg.slope_max.value_or(caustic ? -0.6 : -0.7)};
}

ExperimentConfig config_from_json(const json& j) {
  if (!j.is_object()) throw ConfigError("config: top level must be an object");
  for (const auto& [key, value] : j.items()) {
    if (std::find(known_fields().begin(), known_fields().end(), key) == known_fields().end()) {
      bad(key, "one of the known fields {" + joined(known_fields()) + "}");
    }
  }
  if (!j.contains("experiment")) throw ConfigError("config: missing required field 'experiment'");
  if (!j.at("experiment").is_string()) bad("experiment", "a string");
  ExperimentConfig cfg = default_config(experiment_from_string(j.at("experiment").get<std::string>()));

  if (needs_masses(cfg.experiment) && !j.contains("masses")) {
    throw ConfigError("config: missing required field 'masses' (a strictly increasing list of positive numbers)");
  }
  if (j.contains("masses")) {
    const auto& m = j.at("masses");
    if (!m.is_array() || (m.empty() && needs_masses(cfg.experiment))) bad("masses", "a nonempty, strictly increasing list of positive numbers");
    std::vector<double> ms;
    for (const auto& v : m) {
      if (!v.is_number() || !(v.get<double>() > 0.0)) bad("masses", "positive numbers");
      if (!ms.empty() && !(v.get<double>() > ms.back())) bad("masses", "a strictly increasing list");
      ms.push_back(v.get<double>());
    }
    cfg.masses = ms;
  }
  if (j.contains("E")) cfg.E = number(j, "E");
  if (j.contains("c")) {
    cfg.c = number(j, "c");
    if (cfg.c < 0.0) bad("c", "a nonnegative number");
  }
  if (j.contains("grid_n")) cfg.grid_n = count(j, "grid_n", 128);
  if (j.contains("grid_scaling")) {
    const auto& v = j.at("grid_scaling");
    const std::string s = v.is_string() ? v.get<std::string>() : "";
    if (s == "fixed") cfg.grid_scaling = GridScaling::fixed;
    else if (s == "sqrt") cfg.grid_scaling = GridScaling::sqrt;
    else if (s == "linear") cfg.grid_scaling = GridScaling::linear;
    else bad("grid_scaling", "one of {fixed, sqrt, linear}");
  }
  if (j.contains("grid_per_mass")) {
    cfg.grid_per_mass = number(j, "grid_per_mass");
    if (!(cfg.grid_per_mass > 0.0)) bad("grid_per_mass", "a positive number");
  }
  if (j.contains("observables")) {
    if (!j.at("observables").is_string() || j.at("observables").get<std::string>() != "default") {
      bad("observables", "\"default\"");
    }
  }
  if (j.contains("seed")) cfg.seed = count(j, "seed", 0);
  if (j.contains("output_path")) {
    if (!j.at("output_path").is_string()) bad("output_path", "a string");
    cfg.output_path = j.at("output_path").get<std::string>();
  }
  if (j.contains("workers")) cfg.workers = count(j, "workers", 0);
  if (j.contains("keep_center")) {
    const auto& v = j.at("keep_center");
    const std::string s = v.is_string() ? v.get<std::string>() : "";
    if (s == "E0") cfg.keep_center = KeepCenter::nearest_eigenvalue;
    else if (s == "E") cfg.keep_center = KeepCenter::target;
    else bad("keep_center", "one of {E0, E}");
  }
  if (j.contains("expansion_order")) {
    const auto k = count(j, "expansion_order", 0);
    if (k > 3) bad("expansion_order", "an integer in 0..3");
    cfg.expansion_order = static_cast<int>(k);
  }
  if (j.contains("bump_count")) cfg.bump_count = count(j, "bump_count", 1);
  if (j.contains("slope_min")) cfg.slope_min = number(j, "slope_min");
  if (j.contains("slope_max")) cfg.slope_max = number(j, "slope_max");
  return cfg;
}

json config_to_json(const ExperimentConfig& cfg) {
  json j;
  j["experiment"] = to_string(cfg.experiment);
  j["E"] = cfg.E;
  j["c"] = cfg.c;
  j["masses"] = cfg.masses;
  j["grid_n"] = cfg.grid_n;
  j["grid_scaling"] = cfg.grid_scaling == GridScaling::fixed  ? "fixed"
                      : cfg.grid_scaling == GridScaling::sqrt ? "sqrt"
                                                              : "linear";
  j["grid_per_mass"] = cfg.grid_per_mass;
  j["observables"] = cfg.observables;
  j["seed"] = cfg.seed;
  j["output_path"] = cfg.output_path;
  j["workers"] = cfg.workers;
  j["keep_center"] = cfg.keep_center == KeepCenter::nearest_eigenvalue ? "E0" : "E";
  j["expansion_order"] = cfg.expansion_order;
  j["bump_count"] = cfg.bump_count;
  if (cfg.slope_min) j["slope_min"] = *cfg.slope_min;
  if (cfg.slope_max) j["slope_max"] = *cfg.slope_max;
  return j;
}

ExperimentConfig read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("config: '" + path + "' is not valid JSON: " + e.what());
  }
  return config_from_json(j);
}

}  // namespace sclab::harness
