#include "sclab/model/two_state_model.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "sclab/errors.hpp"

namespace sclab::model {

namespace {

int sign_of(double x) { return x > 0.0 ? 1 : (x < 0.0 ? -1 : 0); }

// Unit eigenvector of [[v, o], [o, 0]] for eigenvalue lambda, or zeros if undetermined.
std::array<double, 2> block_eigenvector(double v, double o, double lambda) {
  std::array<double, 2> u1{o, lambda - v};
  std::array<double, 2> u2{lambda, o};
  const double n1 = std::hypot(u1[0], u1[1]);
  const double n2 = std::hypot(u2[0], u2[1]);
  const auto& u = n1 >= n2 ? u1 : u2;
  const double nu = std::max(n1, n2);
  if (nu <= 1e-300) return {0.0, 0.0};
  return {u[0] / nu, u[1] / nu};
}

void enforce_continuity(std::vector<std::array<double, 2>>& vs, std::array<double, 2> fallback) {
  std::array<double, 2> prev = fallback;
  for (auto& v : vs) {
    if (v[0] == 0.0 && v[1] == 0.0) v = prev;
    if (v[0] * prev[0] + v[1] * prev[1] < 0.0) {
      v[0] = -v[0];
      v[1] = -v[1];
    }
    prev = v;
  }
}

int sgn_at(const TwoStateModel& m, double X, double reference) {
  if (m.c > 0.0) return 1;
  const int s = sign_of(m.V(reference)) * sign_of(m.V(X));
  return s == 0 ? 1 : s;
}

}  // namespace

TwoStateModel standard_two_state_model(double c, double M) {
  if (c < 0.0) throw InvalidArgument("TwoStateModel: c must be nonnegative");
  if (!(M > 0.0)) throw InvalidArgument("TwoStateModel: M must be positive");
  TwoStateModel m;
  m.V = [](double X) { return -2.0 * std::cos(X) + std::cos(4.0 * X); };
  m.dV = [](double X) { return 2.0 * std::sin(X) - 4.0 * std::sin(4.0 * X); };
  m.e = [](double X) { return 1.0 + X * X; };
  m.de = [](double X) { return 2.0 * X; };
  m.c = c;
  m.M = M;
  return m;
}

ElectronicSurfaces electronic_surfaces(const TwoStateModel& model, const Grid1D& grid) {
  ElectronicSurfaces s;
  const std::size_t n = grid.n;
  s.lambda_plus.resize(n);
  s.lambda_minus.resize(n);
  s.v_plus.resize(n);
  s.v_minus.resize(n);
  s.sgn.resize(n);

  const int s0 = sign_of(model.V(grid.a));
  int last = 1;
  for (std::size_t j = 0; j < n; ++j) {
    const double X = grid.points[j];
    const double v = model.V(X);
    const double o = model.coupling(X);
    const double disc = std::sqrt(v * v + 4.0 * o * o);
    int sg = 1;
    if (model.c == 0.0) {
      const int sv = sign_of(v);
      sg = sv == 0 ? last : (s0 == 0 ? 1 : s0) * sv;
    }
    last = sg;
    s.sgn[j] = sg;
    s.lambda_plus[j] = 0.5 * (v + sg * disc);
    s.lambda_minus[j] = 0.5 * (v - sg * disc);
    s.v_plus[j] = block_eigenvector(v, o, s.lambda_plus[j]);
    s.v_minus[j] = block_eigenvector(v, o, s.lambda_minus[j]);
  }
  enforce_continuity(s.v_plus, {1.0, 0.0});
  enforce_continuity(s.v_minus, {0.0, 1.0});
  return s;
}

SelectedSurface select_surface(const ElectronicSurfaces& surfaces, double E0) {
  auto margin = [E0](const std::vector<double>& lam) {
    double m = std::numeric_limits<double>::infinity();
    for (double l : lam) m = std::min(m, E0 - l);
    return m;
  };
  const double mp = margin(surfaces.lambda_plus);
  const double mm = margin(surfaces.lambda_minus);
  if (!(mp > 0.0) && !(mm > 0.0)) {
    throw NoClassicallyAllowedSurface(
        "select_surface: neither electronic surface stays below E0 = " + std::to_string(E0));
  }
  SelectedSurface out;
  if (mp > 0.0 && mp > mm) {
    out.branch = Branch::plus;
    out.values = surfaces.lambda_plus;
  } else {
    out.branch = Branch::minus;
    out.values = surfaces.lambda_minus;
  }
  return out;
}

double surface_value(const TwoStateModel& m, Branch branch, double X, double reference) {
  const double v = m.V(X);
  const double pm = branch == Branch::plus ? 1.0 : -1.0;
  if (m.c == 0.0) {
    const double r = std::sqrt(1.0 + m.e(X) * m.e(X));
    return 0.5 * v * (1.0 + pm * sign_of(m.V(reference)) * r);
  }
  const double o = m.coupling(X);
  return 0.5 * (v + pm * sgn_at(m, X, reference) * std::sqrt(v * v + 4.0 * o * o));
}

double surface_derivative(const TwoStateModel& m, Branch branch, double X, double reference) {
  const double v = m.V(X);
  const double dv = m.dV(X);
  const double e = m.e(X);
  const double de = m.de(X);
  const double pm = branch == Branch::plus ? 1.0 : -1.0;
  if (m.c == 0.0) {
    const double r = std::sqrt(1.0 + e * e);
    const double s0 = sign_of(m.V(reference));
    return 0.5 * dv * (1.0 + pm * s0 * r) + 0.5 * pm * s0 * v * e * de / r;
  }
  const double o = m.coupling(X);
  const double dO = 0.5 * (dv * e + v * de);
  const double disc = std::sqrt(v * v + 4.0 * o * o);
  return 0.5 * (dv + pm * (v * dv + 4.0 * o * dO) / disc);
}

}  // namespace sclab::model
