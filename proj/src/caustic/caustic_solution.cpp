#include "sclab/caustic/caustic_solution.hpp"

#include <algorithm>
#include <cmath>

#include "sclab/errors.hpp"

namespace sclab::caustic {

namespace {

double refine_maximum(const std::function<double(double)>& f, double lo, double hi) {
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo);
  double f1 = f(x1), f2 = f(x2);
  for (int it = 0; it < 60 && hi - lo > 1e-13 * (1.0 + std::abs(hi)); ++it) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + g * (hi - lo);
      f2 = f(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - g * (hi - lo);
      f1 = f(x1);
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double CausticSolution::continuity_defect(const DualPhase& dp) const {
  double peak = 0.0;
  for (const auto& z : phi) peak = std::max(peak, std::abs(z));
  const double kin = dp.E - dp.potential(X0);
  const double slope = std::sqrt(std::abs(dp.potential_derivative(X0)));
  const auto inner_right = C * sp.ubar(dp.theta(X0)) / std::pow(kin, 0.25);
  const auto inner_left = C * sp.ubar(dp.theta(-X0)) / std::pow(kin, 0.25);
  const auto outer_right = u_at_X0 / slope;
  const auto outer_left = mirror * u_at_X0 / slope;
  const double jump = std::max(std::abs(inner_right - outer_right), std::abs(inner_left - outer_left));
  return jump / peak;
}

CausticSolution assemble_caustic_solution(const DualPhase& dp, double M, const model::Grid1D& grid,
                                          int k, const FourierOptions& options) {
  const double x_plus = std::sqrt(dp.E);
  const auto mod_u = [&](double X) { return std::abs(fourier_integral_u(X, dp, M, options)); };

  std::vector<std::size_t> candidates;
  for (std::size_t j = 0; j < grid.n; ++j) {
    if (grid.points[j] > 0.5 * x_plus && grid.points[j] < x_plus) candidates.push_back(j);
  }
  double X0 = 0.0;
  bool found = false;
  if (candidates.size() >= 3) {
    std::vector<double> mags(candidates.size());
    for (std::size_t i = 0; i < candidates.size(); ++i) mags[i] = mod_u(grid.points[candidates[i]]);
    for (std::size_t i = 1; i + 1 < candidates.size(); ++i) {
      if (mags[i] > mags[i - 1] && mags[i] >= mags[i + 1]) {
        X0 = refine_maximum(mod_u, grid.points[candidates[i - 1]], grid.points[candidates[i + 1]]);
        found = true;
        break;
      }
    }
  }
  if (!found) throw GluePointNotFound("no local maximum of |u| in (X+/2, X+)");

  CausticSolution sol;
  sol.X0 = X0;
  sol.k = k;
  sol.sp = stationary_phase_psis(X0, dp, M, k);
  sol.u_at_X0 = fourier_integral_u(X0, dp, M, options);

  const double kin0 = dp.E - dp.potential(X0);
  const double slope0 = std::sqrt(std::abs(dp.potential_derivative(X0)));
  const auto ubar_right = sol.sp.ubar(dp.theta(X0));
  const auto ubar_left = sol.sp.ubar(dp.theta(-X0));
  sol.C = sol.u_at_X0 * std::pow(kin0, 0.25) / (slope0 * ubar_right);
  sol.mirror = ubar_left / ubar_right;

  const std::size_t n = grid.n;
  sol.u_outer.assign(n, 0.0);
  sol.u_inner.assign(n, 0.0);
  sol.phi.assign(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    const double X = grid.points[j];
    if (std::abs(X) <= X0) {
      const auto ub = sol.sp.ubar(dp.theta(X));
      sol.u_inner[j] = ub;
      sol.phi[j] = sol.C * ub / std::pow(dp.E - dp.potential(X), 0.25);
    } else {
      const double slope = std::sqrt(std::abs(dp.potential_derivative(X)));
      if (X > 0.0) {
        sol.u_outer[j] = fourier_integral_u(X, dp, M, options);
        sol.phi[j] = sol.u_outer[j] / slope;
      } else {
        sol.u_outer[j] = sol.mirror * fourier_integral_u(-X, dp, M, options);
        sol.phi[j] = sol.u_outer[j] / slope;
      }
    }
  }
  return sol;
}

}  // namespace sclab::caustic
