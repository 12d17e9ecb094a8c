#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "sclab/caustic/dual_phase.hpp"
#include "sclab/caustic/fourier_integral.hpp"
#include "sclab/caustic/stationary_phase.hpp"
#include "sclab/model/grid.hpp"

namespace sclab::caustic {

/// Glued approximate eigenfunction: u / sqrt|V'| beyond the glue points and
/// C ubar (E - V)^(-1/4) between them.
struct CausticSolution {
  double X0 = 0.0;
  std::complex<double> C;
  /// ubar(-X0) / ubar(X0); weights the mirrored outer branch on X <= -X0.
  std::complex<double> mirror;
  std::vector<std::complex<double>> u_outer;  // zero on |X| < X0
  std::vector<std::complex<double>> u_inner;  // zero on |X| > X0
  std::vector<std::complex<double>> phi;
  int k = 0;
  StationaryPhase sp;
  std::complex<double> u_at_X0;

  /// Largest relative jump of the two branch formulas at +-X0, scaled by max |phi|.
  double continuity_defect(const DualPhase& dp) const;
};

/// Locates X0 as the first local maximum of |u| on the grid in (X+/2, X+), refines it by
/// golden-section search, and assembles the glued solution. Requires V(X) = X^2 as in dp.
CausticSolution assemble_caustic_solution(const DualPhase& dp, double M, const model::Grid1D& grid,
                                          int k, const FourierOptions& options = {});

}  // namespace sclab::caustic
