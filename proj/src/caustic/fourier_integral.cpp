#include "sclab/caustic/fourier_integral.hpp"

#include <cmath>
#include <string>

#include "sclab/errors.hpp"
#include "sclab/numerics/quadrature.hpp"

namespace sclab::caustic {

namespace {

std::size_t panel_count(double total_phase, const FourierOptions& o, std::size_t floor) {
  const double wavelengths = total_phase / (2.0 * M_PI);
  return floor + static_cast<std::size_t>(std::ceil(o.panels_per_wavelength * wavelengths));
}

// J(tau) = (E / sqrt 2) (sinh tau cosh tau - tau) for |P| = sqrt(2E) cosh tau.
double tail_decay(double E, double tau) {
  return E / std::sqrt(2.0) * (std::sinh(tau) * std::cosh(tau) - tau);
}

}  // namespace

std::complex<double> fourier_integral_u(double X, const DualPhase& dp, double M,
                                        const FourierOptions& options) {
  if (!(M > 0.0)) throw InvalidArgument("fourier_integral_u: M must be positive");
  const double lam = std::sqrt(M);
  const double E = dp.E;
  const double pm = dp.p_max;
  const double c = E / std::sqrt(2.0);
  using cplx = std::complex<double>;

  // Allowed segment, P = pm sin(phi).
  const double inner_phase = 2.0 * lam * (std::abs(X) + std::sqrt(E)) * pm;
  const std::size_t inner_panels = panel_count(inner_phase, options, 8);
  auto inner = [&](double phi) -> cplx {
    const double s = std::sin(phi), co = std::cos(phi);
    const double phase = lam * (-X * pm * s + c * (phi + s * co));
    return std::polar(pm * co, phase);
  };

  // Decaying tails, |P| = pm cosh(tau), cut where lam J >= cutoff.
  double tau_hi = 0.5;
  while (lam * tail_decay(E, tau_hi) < options.decay_cutoff) tau_hi *= 1.5;
  double tau_lo = 0.0;
  for (int it = 0; it < 80; ++it) {
    const double mid = 0.5 * (tau_lo + tau_hi);
    (lam * tail_decay(E, mid) < options.decay_cutoff ? tau_lo : tau_hi) = mid;
  }
  const double tau_cut = tau_hi;
  const double outer_phase = lam * std::abs(X) * pm * (std::cosh(tau_cut) - 1.0);
  const std::size_t outer_panels = panel_count(outer_phase, options, 16);

  const std::size_t nodes = 20 * (inner_panels + 2 * outer_panels);
  if (nodes > options.node_cap) {
    throw QuadratureBudgetExceeded("fourier_integral_u: " + std::to_string(nodes) +
                                   " nodes exceed the cap of " + std::to_string(options.node_cap));
  }

  const double edge = c * M_PI / 2.0;
  auto tail = [&](double tau, double sign) -> cplx {
    const double P = sign * pm * std::cosh(tau);
    const double decay = lam * tail_decay(E, tau);
    const double phase = lam * (-X * P + sign * edge);
    return std::polar(pm * std::sinh(tau) * std::exp(-decay), phase);
  };

  cplx total = numerics::composite_gauss(inner, -0.5 * M_PI, 0.5 * M_PI, inner_panels);
  total += numerics::composite_gauss([&](double t) { return tail(t, 1.0); }, 0.0, tau_cut,
                                     outer_panels);
  total += numerics::composite_gauss([&](double t) { return tail(t, -1.0); }, 0.0, tau_cut,
                                     outer_panels);
  return total;
}

}  // namespace sclab::caustic
