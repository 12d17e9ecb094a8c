#pragma once

#include <functional>
#include <vector>

#include "sclab/model/grid.hpp"

namespace sclab::wkb {

/// Classically allowed interval [left, right] of E - lambda > 0 around a point.
struct AllowedInterval {
  double left;
  double right;
};

/// Brackets and bisects the turning points on either side of `inside`.
AllowedInterval find_turning_points(const std::function<double(double)>& lambda, double E,
                                    double inside, double search_radius);

/// Integral of g (E - lambda)^(-1/2) over the allowed interval, computed with
/// X = m + r sin(phi) so the inverse-square-root endpoint singularities cancel.
double md_weighted_integral(const std::function<double(double)>& g,
                            const std::function<double(double)>& lambda, double E,
                            const AllowedInterval& interval);

/// <g> under rho proportional to (E - lambda)^(-1/2) on the allowed interval.
double md_expectation(const std::function<double(double)>& g,
                      const std::function<double(double)>& lambda, double E,
                      const AllowedInterval& interval);

/// Exact cell averages of the normalized density over [X_j - h/2, X_j + h/2].
std::vector<double> md_cell_averages(const std::function<double(double)>& lambda, double E,
                                     const AllowedInterval& interval, const model::Grid1D& grid);

}  // namespace sclab::wkb
