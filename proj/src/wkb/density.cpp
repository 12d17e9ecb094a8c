#include "sclab/wkb/density.hpp"

#include <cmath>
#include <string>

#include "sclab/errors.hpp"

namespace sclab::wkb {

namespace {

constexpr double kTinyDenominator = 1e-14;

void same_grid(const Density& a, const Density& b) {
  if (!a.grid.same_as(b.grid) || a.values.size() != b.values.size()) {
    throw GridMismatch("densities live on different grids");
  }
}

}  // namespace

Density normalized_density(const Grid1D& grid, std::vector<double> values) {
  if (values.size() != grid.n) throw GridMismatch("density length differs from grid size");
  double total = 0.0;
  for (double v : values) {
    if (v < 0.0 || !std::isfinite(v)) throw InvalidArgument("density values must be finite and nonnegative");
    total += v;
  }
  total *= grid.h;
  if (!(total > 0.0)) throw InvalidArgument("density has zero mass");
  for (double& v : values) v /= total;
  return {grid, std::move(values)};
}

Density md_density(std::span<const double> lambda, double E0, const Grid1D& grid) {
  if (lambda.size() != grid.n) throw GridMismatch("md_density: surface length differs from grid");
  std::vector<double> v(grid.n);
  for (std::size_t j = 0; j < grid.n; ++j) {
    const double k = E0 - lambda[j];
    if (!(k > 0.0)) {
      throw NonpositiveKineticEnergy("md_density: E0 - lambda = " + std::to_string(k) +
                                     " at X = " + std::to_string(grid.points[j]));
    }
    v[j] = 1.0 / std::sqrt(k);
  }
  return normalized_density(grid, std::move(v));
}

Density density_of_wave(std::span<const std::complex<double>> wave, const Grid1D& grid,
                        std::size_t channels) {
  if (wave.size() != grid.n * channels) throw GridMismatch("wave length differs from grid size");
  std::vector<double> v(grid.n, 0.0);
  for (std::size_t j = 0; j < grid.n; ++j) {
    for (std::size_t c = 0; c < channels; ++c) v[j] += std::norm(wave[j * channels + c]);
  }
  return normalized_density(grid, std::move(v));
}

double observable(const std::function<double(double)>& g, const Density& rho) {
  double s = 0.0;
  for (std::size_t j = 0; j < rho.values.size(); ++j) s += g(rho.grid.points[j]) * rho.values[j];
  return s * rho.grid.h;
}

double observable_error(const std::function<double(double)>& g, const Density& a,
                        const Density& b) {
  same_grid(a, b);
  const double ga = observable(g, a);
  if (std::abs(ga) < kTinyDenominator) throw InvalidArgument("observable_error: <g, rho_a> vanishes");
  return std::abs(ga - observable(g, b)) / std::abs(ga);
}

double observable_ratio_error(const std::function<double(double)>& g1,
                              const std::function<double(double)>& g2, const Density& a,
                              const Density& b) {
  same_grid(a, b);
  const double da = observable(g2, a);
  const double db = observable(g2, b);
  if (std::abs(da) < kTinyDenominator || std::abs(db) < kTinyDenominator) {
    throw InvalidArgument("observable_ratio_error: <g2, rho> vanishes");
  }
  return std::abs(observable(g1, a) / da - observable(g1, b) / db);
}

double l1_distance(const Density& a, const Density& b) {
  same_grid(a, b);
  double s = 0.0;
  for (std::size_t j = 0; j < a.values.size(); ++j) s += std::abs(a.values[j] - b.values[j]);
  return s * a.grid.h;
}

}  // namespace sclab::wkb
