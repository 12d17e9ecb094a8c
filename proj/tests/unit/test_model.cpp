#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "sclab/errors.hpp"
#include "sclab/model/grid.hpp"
#include "sclab/model/hamiltonian.hpp"
#include "sclab/model/two_state_model.hpp"

using namespace sclab;
using namespace sclab::model;
using std::numbers::pi;

TEST_CASE("periodic grid covers (a, b] with the right end included") {
  const auto g = Grid1D::periodic(-pi, pi, 8);
  CHECK(g.h == doctest::Approx(pi / 4));
  CHECK(g.points.front() == doctest::Approx(-pi + pi / 4));
  CHECK(g.points.back() == doctest::Approx(pi));
  CHECK(g.nearest_index(0.0) == 3);
  CHECK(g.same_as(Grid1D::periodic(-pi, pi, 8)));
  CHECK_FALSE(g.same_as(Grid1D::periodic(-pi, pi, 10)));
}

TEST_CASE("electronic surfaces diagonalize the 2x2 potential matrix") {
  for (double c : {5.0, 0.0}) {
    const auto m = standard_two_state_model(c, 100.0);
    const auto g = Grid1D::periodic(-pi, pi, 200);
    const auto s = electronic_surfaces(m, g);
    for (std::size_t j = 0; j < g.n; ++j) {
      const double X = g.points[j], V = m.V(X), o = m.coupling(X);
      for (int branch = 0; branch < 2; ++branch) {
        const double l = branch == 0 ? s.lambda_plus[j] : s.lambda_minus[j];
        const auto v = branch == 0 ? s.v_plus[j] : s.v_minus[j];
        CHECK(std::hypot(v[0], v[1]) == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(std::abs(V * v[0] + o * v[1] - l * v[0]) <= 1e-12 * (1.0 + std::abs(V) + std::abs(o)));
        CHECK(std::abs(o * v[0] - l * v[1]) <= 1e-12 * (1.0 + std::abs(V) + std::abs(o)));
      }
      CHECK(std::abs(s.v_plus[j][0] * s.v_minus[j][0] + s.v_plus[j][1] * s.v_minus[j][1]) <= 1e-12);
      CHECK(s.lambda_plus[j] + s.lambda_minus[j] == doctest::Approx(V).epsilon(1e-12));
    }
  }
}

TEST_CASE("eigenvector signs vary continuously along the grid") {
  const auto m = standard_two_state_model(5.0, 100.0);
  const auto g = Grid1D::periodic(-pi, pi, 400);
  const auto s = electronic_surfaces(m, g);
  for (std::size_t j = 1; j < g.n; ++j) {
    CHECK(s.v_minus[j][0] * s.v_minus[j - 1][0] + s.v_minus[j][1] * s.v_minus[j - 1][1] > 0.0);
  }
}

TEST_CASE("gap case selects the lower surface below E0 = 0") {
  const auto m = standard_two_state_model(5.0, 100.0);
  const auto g = Grid1D::periodic(-pi, pi, 128);
  const auto s = electronic_surfaces(m, g);
  const auto sel = select_surface(s, 0.0);
  CHECK(sel.branch == Branch::minus);
  for (double l : sel.values) CHECK(l < 0.0);
  CHECK_THROWS_AS(select_surface(s, -1e3), NoClassicallyAllowedSurface);
}

TEST_CASE("off-grid surface values and derivatives match the grid arrays and finite differences") {
  for (double c : {5.0, 0.0}) {
    const auto m = standard_two_state_model(c, 100.0);
    const auto g = Grid1D::periodic(-pi, pi, 64);
    const auto s = electronic_surfaces(m, g);
    for (std::size_t j = 0; j < g.n; j += 5) {
      const double X = g.points[j];
      CHECK(surface_value(m, Branch::plus, X, -pi) == doctest::Approx(s.lambda_plus[j]).epsilon(1e-12));
      CHECK(surface_value(m, Branch::minus, X, -pi) == doctest::Approx(s.lambda_minus[j]).epsilon(1e-12));
    }
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int t = 0; t < 30; ++t) {
      const double X = u(rng);
      if (c == 0.0 && std::abs(m.V(X)) < 0.05) continue;
      const double eps = 1e-6;
      for (auto b : {Branch::plus, Branch::minus}) {
        const double fd = (surface_value(m, b, X + eps, -pi) - surface_value(m, b, X - eps, -pi)) / (2 * eps);
        CHECK(surface_derivative(m, b, X, -pi) == doctest::Approx(fd).epsilon(1e-6));
      }
    }
  }
}

TEST_CASE("two-state Hamiltonian layout and symmetry") {
  const auto m = standard_two_state_model(5.0, 40.0);
  const auto g = Grid1D::periodic(-pi, pi, 16);
  const auto H = build_two_state_hamiltonian(m, g);
  CHECK(H.channels == 2);
  CHECK(H.matrix.size() == 32);
  const double k = 1.0 / (m.M * g.h * g.h);
  for (std::size_t j = 0; j < g.n; ++j) {
    const double X = g.points[j];
    CHECK(H.matrix(2 * j, 2 * j) == doctest::Approx(k + m.V(X)));
    CHECK(H.matrix(2 * j + 1, 2 * j + 1) == doctest::Approx(k));
    CHECK(H.matrix(2 * j + 1, 2 * j) == doctest::Approx(m.coupling(X)));
    const std::size_t jn = (j + 1) % g.n;
    CHECK(H.matrix(2 * j, 2 * jn) == doctest::Approx(-0.5 * k));
    CHECK(H.matrix(2 * jn + 1, 2 * j + 1) == doctest::Approx(-0.5 * k));
  }
  CHECK_THROWS_AS(build_scalar_hamiltonian([](double) { return 0.0; }, 1.0, Grid1D::periodic(0, 1, 2)),
                  InvalidArgument);
}

TEST_CASE("scalar Hamiltonian annihilates constants up to the potential") {
  const auto g = Grid1D::periodic(-2.0, 2.0, 50);
  const auto H = build_scalar_hamiltonian([](double) { return 0.75; }, 3.0, g);
  const std::vector<double> ones(50, 1.0);
  for (double v : H.matrix.multiply(ones)) CHECK(v == doctest::Approx(0.75).epsilon(1e-12));
}
