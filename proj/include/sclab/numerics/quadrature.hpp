#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace sclab::numerics {

/// Running trapezoid integral: F[0] = 0, F[j] = F[j-1] + h (f[j-1] + f[j]) / 2.
std::vector<double> trapezoid_cumulative(std::span<const double> f, double h);

/// Nodes and weights of the 20-point Gauss-Legendre rule on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
const GaussRule& gauss_legendre20();

/// Composite 20-point Gauss-Legendre on [a, b] split into `panels` equal pieces.
template <class F>
auto composite_gauss(F&& f, double a, double b, std::size_t panels) {
  const GaussRule& g = gauss_legendre20();
  const double w = (b - a) / static_cast<double>(panels);
  decltype(f(a)) sum{};
  for (std::size_t k = 0; k < panels; ++k) {
    const double mid = a + (static_cast<double>(k) + 0.5) * w;
    decltype(f(a)) part{};
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
      part += g.weights[i] * f(mid + 0.5 * w * g.nodes[i]);
    }
    sum += part * (0.5 * w);
  }
  return sum;
}

}  // namespace sclab::numerics
