#include "sclab/wkb/wkb_state.hpp"

#include <cmath>
#include <string>

#include "sclab/errors.hpp"

namespace sclab::wkb {

std::vector<double> wkb_phase(std::span<const double> lambda, double E0, const Grid1D& grid) {
  if (lambda.size() != grid.n) throw GridMismatch("wkb_phase: surface length differs from grid");
  std::vector<double> speed(grid.n);
  for (std::size_t j = 0; j < grid.n; ++j) {
    const double k = E0 - lambda[j];
    if (!(k > 0.0)) {
      throw NonpositiveKineticEnergy("wkb_phase: E0 - lambda = " + std::to_string(k) +
                                     " at X = " + std::to_string(grid.points[j]));
    }
    speed[j] = std::sqrt(2.0 * k);
  }
  const std::size_t origin = grid.nearest_index(0.0);
  std::vector<double> theta(grid.n, 0.0);
  for (std::size_t j = origin + 1; j < grid.n; ++j) {
    theta[j] = theta[j - 1] + 0.5 * grid.h * (speed[j - 1] + speed[j]);
  }
  for (std::size_t j = origin; j-- > 0;) {
    theta[j] = theta[j + 1] - 0.5 * grid.h * (speed[j] + speed[j + 1]);
  }
  return theta;
}

std::vector<std::complex<double>> WkbState::wave() const {
  std::vector<std::complex<double>> out(2 * grid.n);
  const double s = std::sqrt(M);
  for (std::size_t j = 0; j < grid.n; ++j) {
    const std::complex<double> phase = std::polar(1.0, s * theta[j]);
    out[2 * j] = amplitude[j][0] * phase;
    out[2 * j + 1] = amplitude[j][1] * phase;
  }
  return out;
}

WkbState md_ansatz(const Density& rho, std::span<const double> theta,
                   std::span<const std::array<double, 2>> v, double M) {
  const std::size_t n = rho.grid.n;
  if (theta.size() != n || v.size() != n) throw GridMismatch("md_ansatz: inputs on different grids");
  WkbState st;
  st.grid = rho.grid;
  st.theta.assign(theta.begin(), theta.end());
  st.M = M;
  st.amplitude.resize(n);
  double norm = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double r = std::sqrt(rho.values[j]);
    st.amplitude[j] = {r * v[j][0], r * v[j][1]};
    norm += st.amplitude[j][0] * st.amplitude[j][0] + st.amplitude[j][1] * st.amplitude[j][1];
  }
  norm = std::sqrt(norm * rho.grid.h);
  if (!(norm > 0.0)) throw InvalidArgument("md_ansatz: zero amplitude");
  for (auto& a : st.amplitude) {
    a[0] /= norm;
    a[1] /= norm;
  }
  return st;
}

}  // namespace sclab::wkb
