#pragma once

#include <complex>
#include <cstddef>

#include "sclab/caustic/dual_phase.hpp"

namespace sclab::caustic {

struct FourierOptions {
  /// Minimum Gauss-Legendre panels per local oscillation wavelength (20 nodes per panel).
  double panels_per_wavelength = 2.0;
  /// Tails are cut where the continued integrand has decayed by e^{-cutoff}.
  double decay_cutoff = 40.0;
  std::size_t node_cap = 4'000'000;
};

/// u(X) = integral of exp(i sqrt(M) (-X P + theta*(P))) dP over the real line, with theta*
/// continued onto its decaying branch beyond |P| = sqrt(2E). Inside, P = sqrt(2E) sin(phi);
/// outside, |P| = sqrt(2E) cosh(tau); both maps make the integrand smooth.
std::complex<double> fourier_integral_u(double X, const DualPhase& dp, double M,
                                        const FourierOptions& options = {});

}  // namespace sclab::caustic
