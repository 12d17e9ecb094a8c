#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "../oracles/dense_jacobi.hpp"
#include "../oracles/generators.hpp"
#include "sclab/errors.hpp"
#include "sclab/model/grid.hpp"
#include "sclab/model/hamiltonian.hpp"
#include "sclab/numerics/band_matrix.hpp"
#include "sclab/numerics/eigensolver.hpp"
#include "sclab/numerics/polyfit.hpp"
#include "sclab/numerics/quadrature.hpp"
#include "sclab/numerics/regression.hpp"

using namespace sclab;
using namespace sclab::numerics;

namespace {

oracle::Dense to_dense(const SymBandMatrix& a) {
  oracle::Dense d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) d(i, j) = a(i, j);
  return d;
}

double residual(const SymBandMatrix& a, const EigenPair& p) {
  const auto Av = a.multiply(p.vector);
  double r = 0.0;
  for (std::size_t i = 0; i < Av.size(); ++i) r = std::max(r, std::abs(Av[i] - p.value * p.vector[i]));
  return r;
}

SymBandMatrix circulant_laplacian(std::size_t n, double M, double v0) {
  const auto grid = model::Grid1D::periodic(0.0, 2.0 * std::numbers::pi, n);
  return model::build_scalar_hamiltonian([v0](double) { return v0; }, M, grid).matrix;
}

}  // namespace

TEST_CASE("band matrix stores symmetric entries and periodic corners") {
  SymBandMatrix a(6, 1);
  a.set(2, 1, 3.0);
  CHECK(a(1, 2) == 3.0);
  CHECK_FALSE(a.has_corners());
  a.set(0, 5, -1.0);
  CHECK(a.has_corners());
  CHECK(a(5, 0) == -1.0);
  CHECK_THROWS_AS(a.set(4, 0, 1.0), InvalidArgument);
  CHECK_NOTHROW(a.set(4, 0, 0.0));
  CHECK_THROWS_AS(SymBandMatrix(3, 3), InvalidArgument);
}

TEST_CASE("band multiply agrees with the dense product") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 5 + rng() % 30, b = rng() % 4;
    if (b >= n) continue;
    const auto a = oracle::random_band(rng, n, b);
    std::vector<double> x(n);
    std::normal_distribution<double> g;
    for (double& v : x) v = g(rng);
    const auto y = a.multiply(x);
    const auto d = to_dense(a);
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < n; ++j) s += d(i, j) * x[j];
      CHECK(y[i] == doctest::Approx(s).epsilon(1e-13));
    }
  }
}

TEST_CASE("fold permutation turns a cyclic band into a plain band of twice the width") {
  for (std::size_t n : {5u, 8u, 13u}) {
    const auto order = fold_order(n);
    auto sorted = order;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < n; ++i) CHECK(sorted[i] == i);
    const auto a = circulant_laplacian(n, 2.0, 0.0);
    const auto f = fold_periodic(a, order);
    CHECK(f.bandwidth() == 2);
    CHECK_FALSE(f.has_corners());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) CHECK(f(i, j) == a(order[i], order[j]));
  }
}

TEST_CASE("band reduction preserves the spectrum of the dense oracle") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 10 + rng() % 60, b = 1 + rng() % 5;
    const auto a = oracle::random_band(rng, n, b);
    const auto ql = tridiagonal_eigenvalues_ql(band_to_tridiagonal(a));
    const auto ref = oracle::jacobi_eigenvalues(to_dense(a));
    for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(ql[i] - ref[i]) <= 1e-11 * (1.0 + std::abs(ref[i])));
  }
}

TEST_CASE("bisection, Sturm counts and QL agree") {
  std::mt19937_64 rng(5);
  const auto a = oracle::random_band(rng, 80, 3);
  const auto t = band_to_tridiagonal(a);
  const auto ql = tridiagonal_eigenvalues_ql(t);
  for (std::size_t k = 0; k < ql.size(); k += 7) {
    CHECK(tridiagonal_eigenvalue_bisect(t, k) == doctest::Approx(ql[k]).epsilon(1e-12));
    CHECK(sturm_count(t, ql[k] - 1e-9) == k);
  }
  const auto near = tridiagonal_eigenvalues_near(t, 0.3, 5);
  REQUIRE(near.size() == 5);
  for (std::size_t i = 1; i < near.size(); ++i) CHECK(std::abs(near[i] - 0.3) >= std::abs(near[i - 1] - 0.3));
}

TEST_CASE("circulant operators reproduce the analytic eigenvalues") {
  for (std::size_t n : {64u, 256u, 1024u}) {
    const double M = 50.0, v0 = 0.25;
    const auto a = circulant_laplacian(n, M, v0);
    const double h = 2.0 * std::numbers::pi / static_cast<double>(n);
    std::vector<double> exact;
    for (std::size_t k = 0; k < n; ++k)
      exact.push_back(v0 + (1.0 - std::cos(2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n))) / (M * h * h));
    const auto pairs = eigs_near(a, 0.7 * exact[n / 4], 6);
    for (const auto& p : pairs) {
      double gap = 1e300;
      for (double e : exact) gap = std::min(gap, std::abs(e - p.value) / std::abs(e));
      CHECK(gap <= 1e-10);
      CHECK(residual(a, p) <= 1e-8 * a.norm1());
    }
  }
}

TEST_CASE("eigs_near returns orthonormal vectors sorted by distance") {
  std::mt19937_64 rng(3);
  const auto a = oracle::random_band(rng, 150, 2);
  const auto ref = oracle::jacobi_eigenvalues(to_dense(a));
  const auto pairs = eigs_near(a, 0.1, 8);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i > 0) CHECK(std::abs(pairs[i].value - 0.1) >= std::abs(pairs[i - 1].value - 0.1));
    double gap = 1e300;
    for (double e : ref) gap = std::min(gap, std::abs(e - pairs[i].value));
    CHECK(gap <= 1e-9);
    for (std::size_t j = 0; j <= i; ++j) {
      double dot = 0.0;
      for (std::size_t k = 0; k < 150; ++k) dot += pairs[i].vector[k] * pairs[j].vector[k];
      CHECK(std::abs(dot - (i == j ? 1.0 : 0.0)) <= 1e-10);
    }
  }
}

TEST_CASE("eigs_near handles degenerate periodic pairs") {
  const auto a = circulant_laplacian(128, 10.0, 0.0);
  const auto pairs = eigs_near(a, 0.3, 4);
  for (const auto& p : pairs) CHECK(residual(a, p) <= 1e-10 * a.norm1());
  double dot = 0.0;
  for (std::size_t k = 0; k < 128; ++k) dot += pairs[0].vector[k] * pairs[1].vector[k];
  CHECK(std::abs(dot) <= 1e-10);
}

TEST_CASE("composite Gauss-Legendre integrates polynomials and smooth functions") {
  const auto& g = gauss_legendre20();
  CHECK(g.nodes.size() == 20);
  double wsum = 0.0;
  for (double w : g.weights) wsum += w;
  CHECK(wsum == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(composite_gauss([](double x) { return std::pow(x, 39); }, 0.0, 1.0, 1) ==
        doctest::Approx(1.0 / 40.0).epsilon(1e-14));
  CHECK(composite_gauss([](double x) { return std::sin(x); }, 0.0, std::numbers::pi, 4) ==
        doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("cumulative trapezoid is exact for linear data") {
  const std::vector<double> f = {0.0, 1.0, 2.0, 3.0};
  const auto F = trapezoid_cumulative(f, 0.5);
  CHECK(F[0] == 0.0);
  CHECK(F[3] == doctest::Approx(0.5 * 0.5 * 9.0));
}

TEST_CASE("least-squares polyfit recovers polynomials and their derivatives") {
  std::vector<double> xs, ys;
  for (int i = 0; i <= 40; ++i) {
    const double x = -0.3 + 0.015 * i;
    xs.push_back(x);
    ys.push_back(1.0 - 2.0 * x + 0.5 * x * x * x);
  }
  const auto p = lsq_polyfit(xs, ys, 5);
  CHECK(p(0.1) == doctest::Approx(1.0 - 0.2 + 0.0005).epsilon(1e-12));
  CHECK(p.derivative(0.0, 1) == doctest::Approx(-2.0).epsilon(1e-10));
  CHECK(p.derivative(0.0, 3) == doctest::Approx(3.0).epsilon(1e-8));
  CHECK(p.residual_norm <= 1e-12);
  const std::vector<double> same = {1.0, 1.0, 1.0};
  CHECK_THROWS_AS(lsq_polyfit(same, same, 2), RankDeficient);
}

TEST_CASE("log-log slope recovers exact power laws") {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-3.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    const double s = u(rng), c = std::exp(u(rng));
    std::vector<std::pair<double, double>> pts;
    for (double M = 10.0; M < 1e4; M *= 2.7) pts.emplace_back(M, c * std::pow(M, s));
    CHECK(loglog_slope(pts) == doctest::Approx(s).epsilon(1e-12));
  }
  CHECK_THROWS_AS(loglog_slope({{1.0, 1.0}}), InvalidArgument);
  CHECK_THROWS_AS(loglog_slope({{1.0, 1.0}, {2.0, 0.0}}), InvalidArgument);
}
