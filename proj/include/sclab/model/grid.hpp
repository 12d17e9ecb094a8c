#pragma once

#include <cstddef>
#include <vector>

namespace sclab::model {

/// Uniform periodic mesh on (a, b]: X_j = a + (j + 1) h, j = 0..n-1, so X_{n-1} = b.
struct Grid1D {
  std::size_t n = 0;
  double a = 0.0;
  double b = 0.0;
  double h = 0.0;
  std::vector<double> points;

  static Grid1D periodic(double a, double b, std::size_t n);

  double length() const { return b - a; }
  /// Index of the mesh point closest to x.
  std::size_t nearest_index(double x) const;
  bool same_as(const Grid1D& other) const;
};

}  // namespace sclab::model
