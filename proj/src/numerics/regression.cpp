#include "sclab/numerics/regression.hpp"

#include <cmath>

#include "sclab/errors.hpp"

namespace sclab::numerics {

double loglog_slope(const std::vector<std::pair<double, double>>& pairs) {
  if (pairs.size() < 2) throw InvalidArgument("loglog_slope: at least two points required");
  double sx = 0.0, sy = 0.0;
  for (const auto& [m, e] : pairs) {
    if (!(m > 0.0) || !(e > 0.0)) throw InvalidArgument("loglog_slope: inputs must be positive");
    sx += std::log(m);
    sy += std::log(e);
  }
  const double n = static_cast<double>(pairs.size());
  const double mx = sx / n, my = sy / n;
  double sxx = 0.0, sxy = 0.0;
  for (const auto& [m, e] : pairs) {
    const double dx = std::log(m) - mx;
    sxx += dx * dx;
    sxy += dx * (std::log(e) - my);
  }
  if (sxx == 0.0) throw InvalidArgument("loglog_slope: all masses coincide");
  return sxy / sxx;
}

}  // namespace sclab::numerics
