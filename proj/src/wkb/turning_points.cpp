#include "sclab/wkb/turning_points.hpp"

#include <algorithm>
#include <cmath>

#include "sclab/errors.hpp"
#include "sclab/numerics/quadrature.hpp"

namespace sclab::wkb {

namespace {

double bisect_edge(const std::function<double(double)>& lambda, double E, double in, double out) {
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (in + out);
    if (mid == in || mid == out) break;
    if (E - lambda(mid) > 0.0) {
      in = mid;
    } else {
      out = mid;
    }
  }
  return in;
}

double edge(const std::function<double(double)>& lambda, double E, double inside, double radius,
            double direction) {
  constexpr int kSteps = 400;
  const double step = radius / kSteps;
  double prev = inside;
  for (int k = 1; k <= kSteps; ++k) {
    const double x = inside + direction * step * k;
    if (!(E - lambda(x) > 0.0)) return bisect_edge(lambda, E, prev, x);
    prev = x;
  }
  throw InvalidArgument("find_turning_points: no turning point within the search radius");
}

// phi-space integrand of g (E - lambda)^(-1/2) dX with X = m + r sin(phi).
template <class G>
double weighted(const G& g, const std::function<double(double)>& lambda, double E, double m,
                double r, double phi) {
  const double X = m + r * std::sin(phi);
  const double k = E - lambda(X);
  if (!(k > 0.0)) return 0.0;
  return g(X) * r * std::cos(phi) / std::sqrt(k);
}

}  // namespace

AllowedInterval find_turning_points(const std::function<double(double)>& lambda, double E,
                                    double inside, double search_radius) {
  if (!(E - lambda(inside) > 0.0)) {
    throw NonpositiveKineticEnergy("find_turning_points: starting point is not classically allowed");
  }
  return {edge(lambda, E, inside, search_radius, -1.0), edge(lambda, E, inside, search_radius, 1.0)};
}

double md_weighted_integral(const std::function<double(double)>& g,
                            const std::function<double(double)>& lambda, double E,
                            const AllowedInterval& interval) {
  const double m = 0.5 * (interval.left + interval.right);
  const double r = 0.5 * (interval.right - interval.left);
  return numerics::composite_gauss(
      [&](double phi) { return weighted(g, lambda, E, m, r, phi); }, -0.5 * M_PI, 0.5 * M_PI, 64);
}

double md_expectation(const std::function<double(double)>& g,
                      const std::function<double(double)>& lambda, double E,
                      const AllowedInterval& interval) {
  const double num = md_weighted_integral(g, lambda, E, interval);
  const double den = md_weighted_integral([](double) { return 1.0; }, lambda, E, interval);
  return num / den;
}

std::vector<double> md_cell_averages(const std::function<double(double)>& lambda, double E,
                                     const AllowedInterval& interval, const model::Grid1D& grid) {
  const double m = 0.5 * (interval.left + interval.right);
  const double r = 0.5 * (interval.right - interval.left);
  const auto one = [](double) { return 1.0; };
  const double total = md_weighted_integral(one, lambda, E, interval);
  std::vector<double> out(grid.n, 0.0);
  for (std::size_t j = 0; j < grid.n; ++j) {
    const double lo = std::max(grid.points[j] - 0.5 * grid.h, interval.left);
    const double hi = std::min(grid.points[j] + 0.5 * grid.h, interval.right);
    if (!(hi > lo)) continue;
    const double plo = std::asin(std::clamp((lo - m) / r, -1.0, 1.0));
    const double phi_hi = std::asin(std::clamp((hi - m) / r, -1.0, 1.0));
    const double part = numerics::composite_gauss(
        [&](double phi) { return weighted(one, lambda, E, m, r, phi); }, plo, phi_hi, 1);
    out[j] = part / (total * grid.h);
  }
  return out;
}

}  // namespace sclab::wkb
