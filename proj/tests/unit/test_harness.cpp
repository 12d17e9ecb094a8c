#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "sclab/errors.hpp"
#include "sclab/harness/config.hpp"
#include "sclab/harness/experiments.hpp"
#include "sclab/harness/report.hpp"

using namespace sclab;
using namespace sclab::harness;
using nlohmann::json;

namespace {

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("sclab_" + name)).string();
}

std::string error_of(const json& j) {
  try {
    config_from_json(j);
  } catch (const ConfigError& e) {
    return e.what();
  }
  return "";
}

ConvergenceReport populated_report() {
  ConvergenceReport r;
  r.experiment = "example1_gap";
  r.config = config_to_json(default_config(Experiment::example1_gap));
  r.grid_rule = "n = 128";
  MassPoint a;
  a.M = 90;
  a.err_g1 = 0.1 / 3.0;
  a.err_g2 = 1e-17;
  a.grid_n = 360;
  a.E0 = 0.125;
  a.kept = 2;
  a.mask = {1, 0};
  a.wall_time_s = 0.5;
  a.extra["branch"] = "minus";
  MassPoint b = a;
  b.M = 181;
  b.err_g1 = std::nan("");
  b.err_g2 = std::nan("");
  b.status = "failed at eigensolve: no convergence";
  r.points = {a, b};
  r.slope_g1 = -1.0 / 3.0;
  add_check(r, "slope_g1", -1.0 / 3.0, -1.3, -0.7);
  r.passed = false;
  r.wall_time_s = 2.25;
  return r;
}

}  // namespace

TEST_CASE("default configurations carry the reference parameters") {
  const auto gap = default_config(Experiment::example1_gap);
  CHECK(gap.c == 5.0);
  CHECK(gap.E == 0.0);
  CHECK(gap.masses == std::vector<double>{90, 181, 362, 724, 1448, 2896, 5792});
  const auto cross = default_config(Experiment::example1_crossing);
  CHECK(cross.c == 0.0);
  CHECK(cross.E == 1.2);
  const auto ex2 = default_config(Experiment::example2_caustic);
  CHECK(ex2.E == 1.0);
  CHECK(ex2.masses == std::vector<double>{200, 400, 800, 1600, 3200, 6400});
  CHECK(default_config(Experiment::airy_check).masses == std::vector<double>{50, 100, 400});
  CHECK(default_config(Experiment::airy_observable).masses == std::vector<double>{100, 200, 400, 800});
}

TEST_CASE("grid rule realizes even sizes above the base") {
  auto cfg = default_config(Experiment::example1_gap);
  CHECK(cfg.grid_for(90) == 360);
  CHECK(cfg.grid_for(10) == 128);
  cfg.grid_scaling = GridScaling::sqrt;
  CHECK(cfg.grid_for(1000) == 16 * 32);
  cfg.grid_scaling = GridScaling::fixed;
  CHECK(cfg.grid_for(1e6) == 128);
  CHECK(cfg.grid_rule() == "n = 128");
}

TEST_CASE("config JSON round trip and field validation") {
  const auto cfg = default_config(Experiment::example2_caustic);
  const auto back = config_from_json(config_to_json(cfg));
  CHECK(config_to_json(back) == config_to_json(cfg));

  CHECK(error_of({{"experiment", "example1_gap"}}).find("masses") != std::string::npos);
  CHECK(error_of({{"experiment", "example1_gap"}, {"masses", json::array()}}).find("masses") != std::string::npos);
  CHECK(error_of({{"experiment", "example1_gap"}, {"masses", {100, 90}}}).find("increasing") != std::string::npos);
  CHECK(error_of({{"experiment", "example1_gap"}, {"masses", {90}}, {"grid_n", 64}}).find("grid_n") != std::string::npos);
  const auto unknown = error_of({{"experiment", "example1_gap"}, {"masses", {90}}, {"colour", 1}});
  CHECK(unknown.find("colour") != std::string::npos);
  CHECK(unknown.find("grid_scaling") != std::string::npos);
  const auto exp = error_of({{"experiment", "example3"}, {"masses", {90}}});
  CHECK(exp.find("example2_caustic") != std::string::npos);
  CHECK_NOTHROW(config_from_json({{"experiment", "dynamics_suite"}}));
}

TEST_CASE("config files are read from disk") {
  const auto path = temp_path("cfg.json");
  std::ofstream(path) << R"({"masses": [100, 200], "experiment": "airy_observable", "seed": 7})";
  const auto cfg = read_config(path);
  CHECK(cfg.experiment == Experiment::airy_observable);
  CHECK(cfg.seed == 7);
  std::ofstream(path) << "{ not json";
  CHECK_THROWS_AS(read_config(path), ConfigError);
  CHECK_THROWS_AS(read_config(temp_path("missing.json")), ConfigError);
  std::filesystem::remove(path);
}

TEST_CASE("JSON reports round-trip field for field") {
  const auto r = populated_report();
  const auto path = temp_path("report.json");
  write_report(r, path, ReportFormat::json);
  const auto back = read_report(path);
  CHECK(same_report(r, back, false));
  CHECK(std::isnan(back.points[1].err_g1));
  CHECK(back.points[0].err_g2 == 1e-17);
  CHECK_FALSE(back.slope_g2.has_value());
  auto changed = back;
  changed.points[0].wall_time_s = 9.0;
  CHECK_FALSE(same_report(r, changed, false));
  CHECK(same_report(r, changed, true));
  std::filesystem::remove(path);
}

TEST_CASE("CSV export has the exact header and 17 significant digits") {
  const auto csv = report_to_csv(populated_report());
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "M,err_g1,err_g2,slope_g1,slope_g2");
  std::getline(in, line);
  CHECK(line == "90,0.033333333333333333,1.0000000000000001e-17,-0.33333333333333331,nan");
  std::getline(in, line);
  CHECK(line == "181,nan,nan,-0.33333333333333331,nan");
  CHECK(csv.find('\r') == std::string::npos);
  CHECK(csv.back() == '\n');
}

TEST_CASE("a failing mass does not abort the sweep") {
  auto cfg = default_config(Experiment::example1_gap);
  cfg.masses = {1, 2, 3, 4};
  cfg.workers = 3;
  const auto pts = sweep_masses(cfg, [](double M, std::string& stage) {
    stage = "probe";
    if (M == 3) throw std::runtime_error("boom");
    MassPoint p;
    p.err_g1 = p.err_g2 = 1.0 / M;
    return p;
  });
  REQUIRE(pts.size() == 4);
  CHECK(pts[0].ok());
  CHECK(pts[2].status == "failed at probe: boom");
  CHECK(std::isnan(pts[2].err_g1));
  CHECK(pts[3].M == 4);
  ConvergenceReport r;
  r.points = pts;
  fit_slopes(r);
  CHECK(r.slope_g1.value() == doctest::Approx(-1.0));
}

TEST_CASE("single-mass sweep has no slopes and does not pass") {
  auto cfg = default_config(Experiment::example1_gap);
  cfg.masses = {40};
  const auto r = run_experiment(cfg);
  REQUIRE(r.points.size() == 1);
  CHECK(r.points[0].ok());
  CHECK_FALSE(r.slope_g1.has_value());
  CHECK_FALSE(r.passed);
}

TEST_CASE("empty mass lists are rejected") {
  auto cfg = default_config(Experiment::example2_caustic);
  cfg.masses.clear();
  CHECK_THROWS_AS(run_example2(cfg), InvalidArgument);
  cfg.experiment = Experiment::example1_gap;
  CHECK_THROWS_AS(run_example1(cfg), InvalidArgument);
}

TEST_CASE("identical configurations give identical reports regardless of worker count") {
  auto cfg = default_config(Experiment::example2_caustic);
  cfg.masses = {100, 200};
  cfg.workers = 1;
  const auto a = run_experiment(cfg);
  cfg.workers = 2;
  auto b = run_experiment(cfg);
  b.config["workers"] = a.config["workers"];
  CHECK(same_report(a, b, true));

  auto airy = default_config(Experiment::airy_check);
  CHECK(same_report(run_experiment(airy), run_experiment(airy), true));
  airy.seed += 1;
  const auto c = run_experiment(airy);
  CHECK(c.points[0].extra != run_experiment(default_config(Experiment::airy_check)).points[0].extra);
}

TEST_CASE("dynamics suite passes all five property checks") {
  const auto r = run_experiment(default_config(Experiment::dynamics_suite));
  CHECK(r.checks.size() == 7);
  for (const auto& c : r.checks) CHECK_MESSAGE(c.passed, c.name);
  CHECK(r.passed);
}
