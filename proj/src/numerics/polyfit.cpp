#include "sclab/numerics/polyfit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sclab/errors.hpp"

namespace sclab::numerics {

double PolyFit::operator()(double x) const { return derivative(x, 0); }

double PolyFit::derivative(double x, std::size_t order) const {
  const double t = (x - center) / half_width;
  double acc = 0.0;
  for (std::size_t k = coefficients.size(); k-- > order;) {
    double falling = 1.0;
    for (std::size_t r = 0; r < order; ++r) falling *= static_cast<double>(k - r);
    acc = acc * t + falling * coefficients[k];
  }
  return acc / std::pow(half_width, static_cast<double>(order));
}

PolyFit lsq_polyfit(std::span<const double> xs, std::span<const double> ys, std::size_t degree) {
  const std::size_t m = xs.size();
  const std::size_t n = degree + 1;
  if (ys.size() != m) throw DimensionMismatch("lsq_polyfit: xs and ys differ in length");
  if (m < n) throw InvalidArgument("lsq_polyfit: need more samples than the degree");

  const auto [lo, hi] = std::minmax_element(xs.begin(), xs.end());
  PolyFit fit;
  fit.degree = degree;
  fit.center = 0.5 * (*lo + *hi);
  fit.half_width = 0.5 * (*hi - *lo);
  if (!(fit.half_width > 0.0)) fit.half_width = 1.0;

  // Column-major Vandermonde in the mapped variable.
  std::vector<double> a(m * n);
  for (std::size_t i = 0; i < m; ++i) {
    const double t = (xs[i] - fit.center) / fit.half_width;
    double p = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
      a[k * m + i] = p;
      p *= t;
    }
  }
  std::vector<double> b(ys.begin(), ys.end());

  std::vector<double> rdiag(n);
  for (std::size_t k = 0; k < n; ++k) {
    double* col = &a[k * m];
    double norm = 0.0;
    for (std::size_t i = k; i < m; ++i) norm += col[i] * col[i];
    norm = std::sqrt(norm);
    if (norm == 0.0) throw RankDeficient("lsq_polyfit: zero column in the scaled Vandermonde matrix");
    const double alpha = col[k] > 0.0 ? -norm : norm;
    col[k] -= alpha;
    double vnorm2 = 0.0;
    for (std::size_t i = k; i < m; ++i) vnorm2 += col[i] * col[i];
    for (std::size_t j = k + 1; j < n; ++j) {
      double* cj = &a[j * m];
      double d = 0.0;
      for (std::size_t i = k; i < m; ++i) d += col[i] * cj[i];
      const double f = 2.0 * d / vnorm2;
      for (std::size_t i = k; i < m; ++i) cj[i] -= f * col[i];
    }
    double d = 0.0;
    for (std::size_t i = k; i < m; ++i) d += col[i] * b[i];
    const double f = 2.0 * d / vnorm2;
    for (std::size_t i = k; i < m; ++i) b[i] -= f * col[i];
    rdiag[k] = alpha;
  }

  const double rmax = std::abs(*std::max_element(rdiag.begin(), rdiag.end(), [](double x, double y) {
    return std::abs(x) < std::abs(y);
  }));
  for (double r : rdiag) {
    if (std::abs(r) <= 1e3 * std::numeric_limits<double>::epsilon() * rmax * static_cast<double>(m)) {
      throw RankDeficient("lsq_polyfit: scaled Vandermonde columns are numerically collinear");
    }
  }

  fit.coefficients.assign(n, 0.0);
  for (std::size_t k = n; k-- > 0;) {
    double s = b[k];
    for (std::size_t j = k + 1; j < n; ++j) s -= a[j * m + k] * fit.coefficients[j];
    fit.coefficients[k] = s / rdiag[k];
  }

  double res = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double r = fit(xs[i]) - ys[i];
    res += r * r;
  }
  fit.residual_norm = std::sqrt(res);
  return fit;
}

}  // namespace sclab::numerics
