#include "sclab/numerics/quadrature.hpp"

#include <boost/math/quadrature/gauss.hpp>

namespace sclab::numerics {

std::vector<double> trapezoid_cumulative(std::span<const double> f, double h) {
  std::vector<double> out(f.size(), 0.0);
  for (std::size_t j = 1; j < f.size(); ++j) out[j] = out[j - 1] + 0.5 * h * (f[j - 1] + f[j]);
  return out;
}

const GaussRule& gauss_legendre20() {
  static const GaussRule rule = [] {
    using boost::math::quadrature::gauss;
    const auto& x = gauss<double, 20>::abscissa();
    const auto& w = gauss<double, 20>::weights();
    GaussRule r;
    for (std::size_t i = 0; i < x.size(); ++i) {
      r.nodes.push_back(-x[i]);
      r.weights.push_back(w[i]);
      r.nodes.push_back(x[i]);
      r.weights.push_back(w[i]);
    }
    return r;
  }();
  return rule;
}

}  // namespace sclab::numerics
