#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "sclab/model/grid.hpp"

namespace sclab::wkb {

using model::Grid1D;

/// Nonnegative grid function with unit periodic trapezoid integral h * sum(values).
struct Density {
  Grid1D grid;
  std::vector<double> values;
};

/// Rescales nonnegative values to unit integral.
Density normalized_density(const Grid1D& grid, std::vector<double> values);

/// rho proportional to (E0 - lambda)^(-1/2).
Density md_density(std::span<const double> lambda, double E0, const Grid1D& grid);

/// Channel-summed |Phi|^2 of an interleaved wave with `channels` components per point.
Density density_of_wave(std::span<const std::complex<double>> wave, const Grid1D& grid,
                        std::size_t channels);

/// h * sum(g(X_j) rho_j).
double observable(const std::function<double(double)>& g, const Density& rho);

/// |<g, a> - <g, b>| / |<g, a>|.
double observable_error(const std::function<double(double)>& g, const Density& a,
                        const Density& b);

/// |<g1, a>/<g2, a> - <g1, b>/<g2, b>|.
double observable_ratio_error(const std::function<double(double)>& g1,
                              const std::function<double(double)>& g2, const Density& a,
                              const Density& b);

/// h * sum |a - b|.
double l1_distance(const Density& a, const Density& b);

}  // namespace sclab::wkb
