#pragma once

#include <array>
#include <functional>
#include <vector>

#include "sclab/model/grid.hpp"

namespace sclab::model {

using ScalarFn = std::function<double(double)>;

/// Potential family V(X), coupling shape e(X), gap constant c and nuclear mass M.
/// The derivatives dV, de are used by the dynamics on the electronic surfaces.
struct TwoStateModel {
  ScalarFn V;
  ScalarFn e;
  ScalarFn dV;
  ScalarFn de;
  double c = 0.0;
  double M = 1.0;

  /// Off-diagonal entry V e / 2 + c of the 2x2 potential matrix.
  double coupling(double X) const { return 0.5 * V(X) * e(X) + c; }
};

/// V = -2 cos X + cos 4X, e = 1 + X^2.
TwoStateModel standard_two_state_model(double c, double M);

enum class Branch { plus, minus };

struct ElectronicSurfaces {
  std::vector<double> lambda_plus;
  std::vector<double> lambda_minus;
  std::vector<std::array<double, 2>> v_plus;
  std::vector<std::array<double, 2>> v_minus;
  std::vector<int> sgn;
};

ElectronicSurfaces electronic_surfaces(const TwoStateModel& model, const Grid1D& grid);

struct SelectedSurface {
  Branch branch = Branch::minus;
  std::vector<double> values;
};

/// The surface lying strictly below E0 everywhere; with two candidates the one farther below.
SelectedSurface select_surface(const ElectronicSurfaces& surfaces, double E0);

/// Off-grid surface value and derivative for the same sign convention as electronic_surfaces.
/// `reference` is the point where the sign convention is anchored (-pi for the standard model).
double surface_value(const TwoStateModel& model, Branch branch, double X, double reference);
double surface_derivative(const TwoStateModel& model, Branch branch, double X, double reference);

}  // namespace sclab::model
