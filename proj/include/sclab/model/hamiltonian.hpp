#pragma once

#include <cstddef>

#include "sclab/model/grid.hpp"
#include "sclab/model/two_state_model.hpp"
#include "sclab/numerics/band_matrix.hpp"

namespace sclab::model {

/// Finite-difference operator -(1/2M) d^2/dX^2 + potential on a periodic grid.
/// Two-state unknowns are interleaved: index 2j is (X_j, x-), 2j + 1 is (X_j, x+).
struct DiscreteHamiltonian {
  numerics::SymBandMatrix matrix;
  Grid1D grid;
  double mass;
  std::size_t channels;
};

DiscreteHamiltonian build_two_state_hamiltonian(const TwoStateModel& model, const Grid1D& grid);

DiscreteHamiltonian build_scalar_hamiltonian(const ScalarFn& V, double M, const Grid1D& grid);

}  // namespace sclab::model
