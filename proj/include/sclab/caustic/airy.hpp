#pragma once

#include <complex>
#include <cstddef>
#include <functional>

namespace sclab::caustic {

/// u(x) = integral of exp(i sqrt(M) (-x P - P^3/3)) dP, the Fourier integral with dual
/// phase -P^3/3. The real segment |P| <= 3 is integrated directly and the tails are moved
/// onto the rays P = +-(3 + t e^{-+i pi/6}) where the integrand decays like e^{-sqrt(M) t^3/3}.
std::complex<double> airy_fourier_u(double x, double M);

struct MollifierCheck {
  double lhs = 0.0;    // |g * A_M - g|_2
  double bound = 0.0;  // |g'''|_2 / (12 M)
};

/// Periodic working interval [a, a + length) sampled at n points.
struct SpectralGrid {
  double a = -8.0;
  double length = 16.0;
  std::size_t n = 4096;
};

/// Frequency-domain evaluation: the Fourier coefficients of g are multiplied by
/// e^{i k^3 / (12 M)} - 1 (resp. (i k)^3 / (12 M)) and transformed back.
MollifierCheck airy_mollifier_check(const std::function<double(double)>& g, double M,
                                    const SpectralGrid& grid = {});

struct AiryObservables {
  double quantum_ratio = 0.0;    // <g1, |u|^2> / <g2, |u|^2>
  double classical_ratio = 0.0;  // <g1, |x|^(-1/2)> / <g2, |x|^(-1/2)>
  double difference = 0.0;
};

/// Both sides of the Airy observable identity for observables supported in [lo, hi], hi < 0.
AiryObservables airy_md_observable_identity(const std::function<double(double)>& g1,
                                            const std::function<double(double)>& g2, double M,
                                            double lo, double hi);

}  // namespace sclab::caustic
