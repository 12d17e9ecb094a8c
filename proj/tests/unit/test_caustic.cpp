#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <boost/math/special_functions/airy.hpp>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "sclab/caustic/airy.hpp"
#include "sclab/caustic/caustic_solution.hpp"
#include "sclab/caustic/dual_phase.hpp"
#include "sclab/caustic/fourier_integral.hpp"
#include "sclab/caustic/stationary_phase.hpp"
#include "sclab/errors.hpp"

using namespace sclab;
using namespace sclab::caustic;
using cplx = std::complex<double>;
using std::numbers::pi;

namespace {

/// Uniform trapezoid in P over [-L, L] with the closed-form decaying continuation.
cplx brute_force_u(double X, double E, double M, double L, std::size_t n) {
  const double pm = std::sqrt(2.0 * E);
  const auto inside = [&](double P) {
    const double r = P / pm;
    return E / std::sqrt(2.0) * (std::asin(r) + r * std::sqrt(1.0 - r * r));
  };
  const auto phase = [&](double P) -> cplx {
    const double a = std::abs(P);
    if (a <= pm) return inside(P);
    const double t = std::sqrt(a * a / 2.0 - E);
    const double J = a * t / 2.0 - E / std::sqrt(2.0) * std::log((a / std::sqrt(2.0) + t) / std::sqrt(E));
    return cplx((P > 0 ? 1.0 : -1.0) * inside(pm), J);
  };
  const double lam = std::sqrt(M);
  const double h = 2.0 * L / static_cast<double>(n);
  cplx s{};
  for (std::size_t i = 0; i <= n; ++i) {
    const double P = -L + h * static_cast<double>(i);
    const cplx f = std::exp(cplx(0.0, 1.0) * lam * (-X * P + phase(P)));
    s += (i == 0 || i == n ? 0.5 : 1.0) * f;
  }
  return s * h;
}

double bump(double x) {
  const double t = (x - 0.3) / 1.5;
  return std::abs(t) < 1.0 ? std::exp(1.0 - 1.0 / (1.0 - t * t)) : 0.0;
}

}  // namespace

TEST_CASE("dual phase derivatives and the eikonal identity") {
  const auto dp = dual_phase(1.0);
  CHECK(dp.p_max == doctest::Approx(std::sqrt(2.0)));
  CHECK(dp.theta_star(dp.p_max) == doctest::Approx(pi / (2.0 * std::sqrt(2.0))).epsilon(1e-14));
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-1.3, 1.3);
  for (int t = 0; t < 20; ++t) {
    const double P = u(rng), e = 1e-5;
    CHECK(dp.dtheta_star(P) == doctest::Approx((dp.theta_star(P + e) - dp.theta_star(P - e)) / (2 * e)).epsilon(1e-8));
    CHECK(dp.d2theta_star(P) == doctest::Approx((dp.dtheta_star(P + e) - dp.dtheta_star(P - e)) / (2 * e)).epsilon(1e-7));
    CHECK(dp.theta_star(-P) == doctest::Approx(-dp.theta_star(P)));
    const double X = 0.9 * std::abs(P) / std::sqrt(2.0), e2 = 1e-6;
    const double slope = (dp.theta(X + e2) - dp.theta(X - e2)) / (2 * e2);
    CHECK(0.5 * slope * slope + X * X == doctest::Approx(1.0).epsilon(1e-7));
  }
  CHECK(dp.theta_star_continued(2.0).imag() > 0.0);
  CHECK(dp.theta_star_continued(1.0).imag() == 0.0);
  CHECK_THROWS(dp.theta_star(1.5));
}

TEST_CASE("Fourier integral matches a brute-force trapezoid on the extended contour") {
  const auto dp = dual_phase(1.0);
  for (double X : {0.0, 0.3, 0.8, 1.1}) {
    const cplx u = fourier_integral_u(X, dp, 200.0);
    const cplx ref = brute_force_u(X, 1.0, 200.0, 3.6, 2'000'000);
    CHECK(std::abs(u - ref) <= 1e-7 * std::abs(ref));
  }
}

TEST_CASE("Fourier integral is real for the symmetric well and weaker on the mirrored side") {
  const auto dp = dual_phase(1.0);
  for (double X : {0.2, 0.55, 0.95}) {
    const cplx a = fourier_integral_u(X, dp, 400.0), b = fourier_integral_u(-X, dp, 400.0);
    CHECK(std::abs(a.imag()) <= 1e-10 * std::abs(a));
    CHECK(std::abs(b.imag()) <= 1e-10 * std::abs(b));
    CHECK(std::abs(b) < std::abs(a));
  }
  FourierOptions tight;
  tight.node_cap = 100;
  CHECK_THROWS_AS(fourier_integral_u(0.3, dp, 400.0, tight), QuadratureBudgetExceeded);
}

TEST_CASE("leading-order amplitudes are conjugate with modulus |theta*''/2|^(-1/2)") {
  const auto dp = dual_phase(1.0);
  for (double X0 : {0.3, 0.55, 0.8}) {
    const auto sp = stationary_phase_psis(X0, dp, 800.0, 0);
    CHECK(std::abs(sp.psi_minus - std::conj(sp.psi_plus)) <= 1e-10 * std::abs(sp.psi_plus));
    CHECK(std::abs(sp.psi_plus) == doctest::Approx(std::pow(std::abs(0.5 * dp.d2theta_star(sp.P0)), -0.5)).epsilon(1e-9));
  }
  CHECK_THROWS_AS(stationary_phase_psis(0.0, dp, 800.0, 1), DegenerateStationaryPoint);
}

TEST_CASE("stationary phase tracks the Fourier integral at every order") {
  const auto dp = dual_phase(1.0);
  for (double X0 : {0.55, 0.7}) {
    const cplx exact = fourier_integral_u(X0, dp, 800.0);
    for (int k = 0; k <= 3; ++k) {
      const auto sp = stationary_phase_psis(X0, dp, 800.0, k);
      CHECK(std::abs(sp.scale * sp.ubar(sp.theta) - exact) <= 1e-2 * std::abs(exact));
    }
  }
}

TEST_CASE("stationary phase errors decrease with the order at the glue point for M = 800") {
  const auto dp = dual_phase(1.0);
  const auto grid = model::Grid1D::periodic(-2.0, 2.0, 1600);
  const double X0 = assemble_caustic_solution(dp, 800.0, grid, 3).X0;
  const cplx exact = fourier_integral_u(X0, dp, 800.0);
  double prev = 1e300;
  for (int k = 0; k <= 3; ++k) {
    const auto sp = stationary_phase_psis(X0, dp, 800.0, k);
    const double err = std::abs(sp.scale * sp.ubar(sp.theta) - exact) / std::abs(exact);
    CHECK(err < prev);
    prev = err;
  }
}

TEST_CASE("glued caustic solution is continuous at the glue points") {
  const auto dp = dual_phase(1.0);
  const auto grid = model::Grid1D::periodic(-2.0, 2.0, 400);
  const auto sol = assemble_caustic_solution(dp, 200.0, grid, 3);
  CHECK(sol.X0 > 0.5);
  CHECK(sol.X0 < 1.0);
  CHECK(sol.phi.size() == grid.n);
  CHECK(sol.continuity_defect(dp) <= 1e-8);
}

TEST_CASE("Airy Fourier integral matches the scaled Airy function") {
  for (double M : {50.0, 400.0}) {
    for (double x : {-3.0, -1.2, -0.1, 0.0, 0.4, 1.5}) {
      const cplx u = airy_fourier_u(x, M);
      const double ref = 2.0 * pi * std::pow(M, -1.0 / 6.0) * boost::math::airy_ai(std::cbrt(M) * x);
      CHECK(std::abs(u - ref) <= 1e-9 * (std::abs(ref) + 1e-3));
    }
  }
  CHECK_THROWS_AS(airy_fourier_u(8.0, 100.0), SupportViolation);
}

TEST_CASE("Airy mollifier bound holds for a smooth bump and is nearly sharp at large M") {
  for (double M : {50.0, 400.0, 5000.0}) {
    const auto r = airy_mollifier_check(bump, M);
    CHECK(r.lhs <= r.bound);
    if (M == 5000.0) CHECK(r.lhs / r.bound > 0.95);
  }
  CHECK_THROWS_AS(airy_mollifier_check([](double x) { return std::abs(x) < 0.5 ? 1.0 : 0.0; }, 100.0),
                  AliasingDetected);
}

TEST_CASE("Airy observable identity difference shrinks with M") {
  const auto g2 = [](double x) {
    const double t = (x + 2.0) / 1.2;
    return std::abs(t) < 1.0 ? std::exp(-1.0 / (1.0 - t * t)) : 0.0;
  };
  const auto g1 = [&](double x) { return -x * g2(x); };
  const auto a = airy_md_observable_identity(g1, g2, 100.0, -3.2, -0.8);
  const auto b = airy_md_observable_identity(g1, g2, 400.0, -3.2, -0.8);
  CHECK(b.difference < a.difference);
  CHECK(a.classical_ratio == doctest::Approx(b.classical_ratio).epsilon(1e-12));
  CHECK_THROWS_AS(airy_md_observable_identity(g1, g2, 100.0, -1.0, 0.5), SupportViolation);
}
