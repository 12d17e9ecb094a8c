#pragma once

#include <array>
#include <complex>
#include <span>
#include <vector>

#include "sclab/wkb/density.hpp"

namespace sclab::wkb {

/// Theta(X) = cumulative trapezoid of sqrt(2 (E0 - lambda)), zero at the grid point nearest X = 0.
std::vector<double> wkb_phase(std::span<const double> lambda, double E0, const Grid1D& grid);

/// sqrt(rho) e^{i sqrt(M) Theta} v on the interleaved (X, x) grid.
struct WkbState {
  Grid1D grid;
  std::vector<double> theta;
  std::vector<std::array<double, 2>> amplitude;
  double M = 1.0;

  /// Interleaved complex wave with discrete norm h * sum |Phi|^2 = 1.
  std::vector<std::complex<double>> wave() const;
};

WkbState md_ansatz(const Density& rho, std::span<const double> theta,
                   std::span<const std::array<double, 2>> v, double M);

}  // namespace sclab::wkb
