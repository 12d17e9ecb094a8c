#include "sclab/caustic/airy.hpp"

#include <fftw3.h>

#include <cmath>
#include <string>
#include <vector>

#include "sclab/errors.hpp"
#include "sclab/numerics/quadrature.hpp"

namespace sclab::caustic {

namespace {

using cplx = std::complex<double>;

constexpr double kSegment = 3.0;
constexpr double kTailDecay = 50.0;
constexpr double kAliasingLevel = 1e-10;

std::size_t panels_for(double phase) {
  return 8 + static_cast<std::size_t>(std::ceil(2.0 * phase / (2.0 * M_PI)));
}

// Forward transform, spectral multiplier, inverse transform; returns the discrete L2 norm.
double filtered_norm(const std::vector<double>& g, const SpectralGrid& grid,
                     const std::function<cplx(double)>& multiplier, double* tail_fraction) {
  const std::size_t n = grid.n;
  fftw_complex* buf = fftw_alloc_complex(n);
  fftw_plan fwd = fftw_plan_dft_1d(static_cast<int>(n), buf, buf, FFTW_FORWARD, FFTW_ESTIMATE);
  fftw_plan bwd = fftw_plan_dft_1d(static_cast<int>(n), buf, buf, FFTW_BACKWARD, FFTW_ESTIMATE);
  for (std::size_t j = 0; j < n; ++j) {
    buf[j][0] = g[j];
    buf[j][1] = 0.0;
  }
  fftw_execute(fwd);
  double total = 0.0, tail = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const long m = j <= n / 2 ? static_cast<long>(j) : static_cast<long>(j) - static_cast<long>(n);
    const double k = 2.0 * M_PI * static_cast<double>(m) / grid.length;
    const double e = buf[j][0] * buf[j][0] + buf[j][1] * buf[j][1];
    total += e;
    if (std::abs(static_cast<double>(m)) > static_cast<double>(n) / 3.0) tail += e;
    const cplx z = cplx(buf[j][0], buf[j][1]) * multiplier(k);
    buf[j][0] = z.real() / static_cast<double>(n);
    buf[j][1] = z.imag() / static_cast<double>(n);
  }
  fftw_execute(bwd);
  double s = 0.0;
  for (std::size_t j = 0; j < n; ++j) s += buf[j][0] * buf[j][0] + buf[j][1] * buf[j][1];
  fftw_destroy_plan(fwd);
  fftw_destroy_plan(bwd);
  fftw_free(buf);
  if (tail_fraction != nullptr) *tail_fraction = total > 0.0 ? tail / total : 0.0;
  return std::sqrt(s * grid.length / static_cast<double>(n));
}

}  // namespace

cplx airy_fourier_u(double x, double M) {
  if (!(M > 0.0)) throw InvalidArgument("airy_fourier_u: M must be positive");
  if (std::abs(x) > 0.8 * kSegment * kSegment) {
    throw SupportViolation("airy_fourier_u: |x| too large for the fixed contour");
  }
  const double lam = std::sqrt(M);
  const auto f = [&](cplx P) { return std::exp(cplx(0.0, lam) * (-x * P - P * P * P / 3.0)); };

  const double seg_phase = lam * (std::abs(x) + kSegment * kSegment) * 2.0 * kSegment;
  cplx total = numerics::composite_gauss([&](double P) { return f(cplx(P, 0.0)); }, -kSegment,
                                         kSegment, panels_for(seg_phase));

  const double t_max = std::cbrt(3.0 * kTailDecay / lam);
  const double ray_phase = lam * (std::abs(x) + (kSegment + t_max) * (kSegment + t_max)) * t_max;
  const std::size_t ray_panels = panels_for(ray_phase);
  const cplx right_dir = std::polar(1.0, -M_PI / 6.0);
  const cplx left_dir = -std::polar(1.0, M_PI / 6.0);
  // The right ray runs outward from +3; the left ray is traversed inward to -3.
  total += right_dir * numerics::composite_gauss(
                           [&](double t) { return f(kSegment + t * right_dir); }, 0.0, t_max,
                           ray_panels);
  total -= left_dir * numerics::composite_gauss(
                          [&](double t) { return f(-kSegment + t * left_dir); }, 0.0, t_max,
                          ray_panels);
  return total;
}

MollifierCheck airy_mollifier_check(const std::function<double(double)>& g, double M,
                                    const SpectralGrid& grid) {
  if (!(M > 0.0)) throw InvalidArgument("airy_mollifier_check: M must be positive");
  std::vector<double> samples(grid.n);
  const double h = grid.length / static_cast<double>(grid.n);
  for (std::size_t j = 0; j < grid.n; ++j) samples[j] = g(grid.a + h * static_cast<double>(j));

  double tail = 0.0;
  MollifierCheck out;
  out.lhs = filtered_norm(samples, grid,
                          [M](double k) { return std::polar(1.0, k * k * k / (12.0 * M)) - 1.0; },
                          &tail);
  if (tail > kAliasingLevel) {
    throw AliasingDetected("airy_mollifier_check: spectral tail holds " + std::to_string(tail) +
                           " of the energy; refine the grid");
  }
  out.bound = filtered_norm(samples, grid,
                            [](double k) { return cplx(0.0, -k * k * k); }, nullptr) /
              (12.0 * M);
  return out;
}

namespace {

struct Moments {
  double q1 = 0, q2 = 0, c1 = 0, c2 = 0;
  Moments& operator+=(const Moments& o) {
    q1 += o.q1, q2 += o.q2, c1 += o.c1, c2 += o.c2;
    return *this;
  }
  Moments operator*(double s) const { return {q1 * s, q2 * s, c1 * s, c2 * s}; }
  friend Moments operator*(double s, const Moments& m) { return m * s; }
};

}  // namespace

AiryObservables airy_md_observable_identity(const std::function<double(double)>& g1,
                                            const std::function<double(double)>& g2, double M,
                                            double lo, double hi) {
  if (!(hi < 0.0) || !(lo < hi)) {
    throw SupportViolation("airy_md_observable_identity: support must lie in x < 0");
  }
  if (std::abs(lo) > 0.8 * kSegment * kSegment) {
    throw SupportViolation("airy_md_observable_identity: support reaches too far left");
  }
  const double lam = std::sqrt(M);
  const double osc = 2.0 * lam * std::sqrt(std::abs(lo)) * (hi - lo);
  const std::size_t panels = panels_for(osc) + 16;

  const Moments m = numerics::composite_gauss(
      [&](double x) {
        const double a = g1(x), b = g2(x);
        if (a == 0.0 && b == 0.0) return Moments{};
        const double rho_q = std::norm(airy_fourier_u(x, M));
        const double rho_c = 0.5 / std::sqrt(std::abs(x));
        return Moments{a * rho_q, b * rho_q, a * rho_c, b * rho_c};
      },
      lo, hi, panels);
  if (m.q2 == 0.0 || m.c2 == 0.0) throw InvalidArgument("airy_md_observable_identity: <g2> vanishes");
  AiryObservables out;
  out.quantum_ratio = m.q1 / m.q2;
  out.classical_ratio = m.c1 / m.c2;
  out.difference = std::abs(out.quantum_ratio - out.classical_ratio);
  return out;
}

}  // namespace sclab::caustic
