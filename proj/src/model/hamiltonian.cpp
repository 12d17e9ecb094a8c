#include "sclab/model/hamiltonian.hpp"

#include <string>

#include "sclab/errors.hpp"

namespace sclab::model {

namespace {

void check(const Grid1D& grid, double M) {
  if (grid.n < 3) {
    throw InvalidArgument("discrete Hamiltonian needs at least 3 grid points, got " +
                          std::to_string(grid.n));
  }
  if (!(M > 0.0)) throw InvalidArgument("discrete Hamiltonian: mass must be positive");
}

}  // namespace

DiscreteHamiltonian build_two_state_hamiltonian(const TwoStateModel& model, const Grid1D& grid) {
  check(grid, model.M);
  const std::size_t n = grid.n;
  const double diag = 1.0 / (model.M * grid.h * grid.h);
  const double off = -0.5 / (model.M * grid.h * grid.h);
  numerics::SymBandMatrix a(2 * n, 2);
  for (std::size_t j = 0; j < n; ++j) {
    const double X = grid.points[j];
    const std::size_t lo = 2 * j;
    const std::size_t hi = 2 * j + 1;
    a.set(lo, lo, diag + model.V(X));
    a.set(hi, hi, diag);
    a.set(hi, lo, model.coupling(X));
    const std::size_t next = (j + 1) % n;
    a.set(2 * next, lo, off);
    a.set(2 * next + 1, hi, off);
  }
  return {std::move(a), grid, model.M, 2};
}

DiscreteHamiltonian build_scalar_hamiltonian(const ScalarFn& V, double M, const Grid1D& grid) {
  check(grid, M);
  const std::size_t n = grid.n;
  const double diag = 1.0 / (M * grid.h * grid.h);
  const double off = -0.5 / (M * grid.h * grid.h);
  numerics::SymBandMatrix a(n, 1);
  for (std::size_t j = 0; j < n; ++j) {
    a.set(j, j, diag + V(grid.points[j]));
    a.set((j + 1) % n, j, off);
  }
  return {std::move(a), grid, M, 1};
}

}  // namespace sclab::model
