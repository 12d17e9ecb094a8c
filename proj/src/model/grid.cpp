#include "sclab/model/grid.hpp"

#include <cmath>

#include "sclab/errors.hpp"

namespace sclab::model {

Grid1D Grid1D::periodic(double a, double b, std::size_t n) {
  if (n == 0) throw InvalidArgument("Grid1D: n must be positive");
  if (!(b > a)) throw InvalidArgument("Grid1D: need a < b");
  Grid1D g;
  g.n = n;
  g.a = a;
  g.b = b;
  g.h = (b - a) / static_cast<double>(n);
  g.points.resize(n);
  for (std::size_t j = 0; j < n; ++j) g.points[j] = a + static_cast<double>(j + 1) * g.h;
  g.points.back() = b;
  return g;
}

std::size_t Grid1D::nearest_index(double x) const {
  const double t = (x - a) / h - 1.0;
  if (t <= 0.0) return 0;
  const auto j = static_cast<std::size_t>(std::lround(t));
  return j < n ? j : n - 1;
}

bool Grid1D::same_as(const Grid1D& other) const {
  return n == other.n && a == other.a && b == other.b;
}

}  // namespace sclab::model
