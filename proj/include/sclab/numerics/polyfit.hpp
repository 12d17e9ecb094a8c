#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace sclab::numerics {

/// Least-squares polynomial in the mapped variable t = (x - center) / half_width.
struct PolyFit {
  std::size_t degree = 0;
  std::vector<double> coefficients;  // ascending powers of t
  double residual_norm = 0.0;
  double center = 0.0;
  double half_width = 1.0;

  double operator()(double x) const;
  /// d^order p / dx^order at x.
  double derivative(double x, std::size_t order) const;
};

/// Samples are mapped affinely onto [-1, 1] and fitted by Householder QR.
PolyFit lsq_polyfit(std::span<const double> xs, std::span<const double> ys, std::size_t degree);

}  // namespace sclab::numerics
