#pragma once

#include <utility>
#include <vector>

namespace sclab::numerics {

/// Least-squares slope of log(err) against log(M).
double loglog_slope(const std::vector<std::pair<double, double>>& pairs);

}  // namespace sclab::numerics
