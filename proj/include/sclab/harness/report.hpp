#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace sclab::harness {

/// One mass of a sweep. Absent errors are stored as NaN and flagged by `status`.
struct MassPoint {
  double M = 0.0;
  double err_g1 = 0.0;
  double err_g2 = 0.0;
  std::size_t grid_n = 0;
  double E0 = 0.0;
  std::size_t kept = 0;
  std::vector<int> mask;
  std::string status = "ok";
  double wall_time_s = 0.0;
  nlohmann::json extra = nlohmann::json::object();

  bool ok() const { return status == "ok"; }
};

/// A named pass/fail threshold evaluated by a run.
struct Check {
  std::string name;
  double value = 0.0;
  double lo = 0.0;
  double hi = 0.0;
  bool passed = false;
};

struct ConvergenceReport {
  std::string experiment;
  nlohmann::json config = nlohmann::json::object();
  std::string grid_rule;
  std::vector<MassPoint> points;
  std::optional<double> slope_g1;
  std::optional<double> slope_g2;
  std::vector<Check> checks;
  bool passed = false;
  double wall_time_s = 0.0;
};

/// Fits the slopes from the successful points; absent when fewer than two remain.
void fit_slopes(ConvergenceReport& report);

/// Appends a check lo <= value <= hi.
Check& add_check(ConvergenceReport& report, std::string name, double value, double lo, double hi);

nlohmann::json report_to_json(const ConvergenceReport& report);
ConvergenceReport report_from_json(const nlohmann::json& j);

/// Header "M,err_g1,err_g2,slope_g1,slope_g2", 17 significant digits, LF line endings.
std::string report_to_csv(const ConvergenceReport& report);

enum class ReportFormat { csv, json };

void write_report(const ConvergenceReport& report, const std::string& path, ReportFormat format);
ConvergenceReport read_report(const std::string& path);

/// Field-for-field equality, ignoring wall-clock times when `ignore_timing`.
bool same_report(const ConvergenceReport& a, const ConvergenceReport& b, bool ignore_timing);

}  // namespace sclab::harness
