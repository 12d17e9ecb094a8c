#include "sclab/harness/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

#include "sclab/errors.hpp"
#include "sclab/numerics/regression.hpp"

namespace sclab::harness {

namespace {

using nlohmann::json;

json number_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

double number_from(const json& j) {
  return j.is_null() ? std::numeric_limits<double>::quiet_NaN() : j.get<double>();
}

std::string g17(double x) {
  if (std::isnan(x)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

bool same_number(double a, double b) { return (std::isnan(a) && std::isnan(b)) || a == b; }

bool same_optional(const std::optional<double>& a, const std::optional<double>& b) {
  if (a.has_value() != b.has_value()) return false;
  return !a || same_number(*a, *b);
}

}  // namespace

void fit_slopes(ConvergenceReport& report) {
  std::vector<std::pair<double, double>> p1, p2;
  for (const auto& p : report.points) {
    if (!p.ok()) continue;
    if (std::isfinite(p.err_g1) && p.err_g1 > 0.0) p1.emplace_back(p.M, p.err_g1);
    if (std::isfinite(p.err_g2) && p.err_g2 > 0.0) p2.emplace_back(p.M, p.err_g2);
  }
  report.slope_g1.reset();
  report.slope_g2.reset();
  if (p1.size() >= 2) report.slope_g1 = numerics::loglog_slope(p1);
  if (p2.size() >= 2) report.slope_g2 = numerics::loglog_slope(p2);
}

Check& add_check(ConvergenceReport& report, std::string name, double value, double lo, double hi) {
  Check c;
  c.name = std::move(name);
  c.value = value;
  c.lo = lo;
  c.hi = hi;
  c.passed = std::isfinite(value) && value >= lo && value <= hi;
  report.checks.push_back(c);
  return report.checks.back();
}

json report_to_json(const ConvergenceReport& r) {
  json j;
  j["experiment"] = r.experiment;
  j["config"] = r.config;
  j["grid_rule"] = r.grid_rule;
  json pts = json::array();
  for (const auto& p : r.points) {
    json q;
    q["M"] = p.M;
    q["err_g1"] = number_or_null(p.err_g1);
    q["err_g2"] = number_or_null(p.err_g2);
    q["grid_n"] = p.grid_n;
    q["E0"] = number_or_null(p.E0);
    q["kept"] = p.kept;
    q["mask"] = p.mask;
    q["status"] = p.status;
    q["wall_time_s"] = p.wall_time_s;
    q["extra"] = p.extra;
    pts.push_back(q);
  }
  j["points"] = pts;
  j["slopes"] = {{"g1", r.slope_g1 ? json(*r.slope_g1) : json(nullptr)},
                 {"g2", r.slope_g2 ? json(*r.slope_g2) : json(nullptr)}};
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name},
                      {"value", number_or_null(c.value)},
                      {"lo", number_or_null(c.lo)},
                      {"hi", number_or_null(c.hi)},
                      {"passed", c.passed}});
  }
  j["checks"] = checks;
  j["passed"] = r.passed;
  j["wall_time_s"] = r.wall_time_s;
  return j;
}

ConvergenceReport report_from_json(const json& j) {
  try {
    ConvergenceReport r;
    r.experiment = j.at("experiment").get<std::string>();
    r.config = j.at("config");
    r.grid_rule = j.value("grid_rule", "");
    for (const auto& q : j.at("points")) {
      MassPoint p;
      p.M = q.at("M").get<double>();
      p.err_g1 = number_from(q.at("err_g1"));
      p.err_g2 = number_from(q.at("err_g2"));
      p.grid_n = q.at("grid_n").get<std::size_t>();
      p.E0 = number_from(q.at("E0"));
      p.kept = q.at("kept").get<std::size_t>();
      p.mask = q.at("mask").get<std::vector<int>>();
      p.status = q.at("status").get<std::string>();
      p.wall_time_s = q.at("wall_time_s").get<double>();
      p.extra = q.at("extra");
      r.points.push_back(p);
    }
    const auto& s = j.at("slopes");
    if (!s.at("g1").is_null()) r.slope_g1 = s.at("g1").get<double>();
    if (!s.at("g2").is_null()) r.slope_g2 = s.at("g2").get<double>();
    for (const auto& c : j.at("checks")) {
      Check k;
      k.name = c.at("name").get<std::string>();
      k.value = number_from(c.at("value"));
      k.lo = number_from(c.at("lo"));
      k.hi = number_from(c.at("hi"));
      k.passed = c.at("passed").get<bool>();
      r.checks.push_back(k);
    }
    r.passed = j.at("passed").get<bool>();
    r.wall_time_s = j.at("wall_time_s").get<double>();
    return r;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("report: malformed JSON report: ") + e.what());
  }
}

std::string report_to_csv(const ConvergenceReport& r) {
  std::string out = "M,err_g1,err_g2,slope_g1,slope_g2\n";
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const std::string s1 = g17(r.slope_g1.value_or(nan));
  const std::string s2 = g17(r.slope_g2.value_or(nan));
  for (const auto& p : r.points) {
    out += g17(p.M) + "," + g17(p.ok() ? p.err_g1 : nan) + "," + g17(p.ok() ? p.err_g2 : nan) +
           "," + s1 + "," + s2 + "\n";
  }
  return out;
}

void write_report(const ConvergenceReport& report, const std::string& path, ReportFormat format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("report: cannot write '" + path + "'");
  if (format == ReportFormat::csv) {
    out << report_to_csv(report);
  } else {
    out << report_to_json(report).dump(2) << "\n";
  }
  if (!out) throw ConfigError("report: write to '" + path + "' failed");
}

ConvergenceReport read_report(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("report: cannot open '" + path + "'");
  try {
    return report_from_json(json::parse(in));
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("report: '") + path + "' is not valid JSON: " + e.what());
  }
}

bool same_report(const ConvergenceReport& a, const ConvergenceReport& b, bool ignore_timing) {
  if (a.experiment != b.experiment || a.config != b.config || a.grid_rule != b.grid_rule) return false;
  if (a.points.size() != b.points.size() || a.checks.size() != b.checks.size()) return false;
  for (std::size_t i = 0; i < a.points.size(); ++i) {
    const auto& p = a.points[i];
    const auto& q = b.points[i];
    if (!same_number(p.M, q.M) || !same_number(p.err_g1, q.err_g1) ||
        !same_number(p.err_g2, q.err_g2) || p.grid_n != q.grid_n || !same_number(p.E0, q.E0) ||
        p.kept != q.kept || p.mask != q.mask || p.status != q.status || p.extra != q.extra) {
      return false;
    }
    if (!ignore_timing && p.wall_time_s != q.wall_time_s) return false;
  }
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    const auto& c = a.checks[i];
    const auto& d = b.checks[i];
    if (c.name != d.name || !same_number(c.value, d.value) || !same_number(c.lo, d.lo) ||
        !same_number(c.hi, d.hi) || c.passed != d.passed) {
      return false;
    }
  }
  if (!same_optional(a.slope_g1, b.slope_g1) || !same_optional(a.slope_g2, b.slope_g2)) return false;
  if (a.passed != b.passed) return false;
  return ignore_timing || a.wall_time_s == b.wall_time_s;
}

}  // namespace sclab::harness
