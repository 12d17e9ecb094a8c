#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "sclab/numerics/eigensolver.hpp"

namespace sclab::projection {

using numerics::EigenPair;

/// Eigenpairs near E with the near-degeneracy clustering of the kept subset.
struct EigenSelection {
  std::vector<EigenPair> pairs;
  std::vector<std::size_t> kept;  // indices into pairs, |E_i - E| < M^(-1/2)
  double E0 = 0.0;                 // eigenvalue nearest E
  /// cluster_matrix[r][c] = 1 when kept eigenvalue c belongs to cluster row r.
  std::vector<std::vector<int>> cluster_matrix;
};

/// Keeps |E_i - E| < M^(-1/2); row i claims column j when |E_i - E_j| < M^(-3/4)
/// and no earlier row has claimed j.
EigenSelection cluster_eigenvalues(std::vector<EigenPair> pairs, double E, double M);

struct ProjectedState {
  std::vector<std::complex<double>> coefficients;  // <Y_j, Phi> over the kept vectors
  std::vector<std::complex<double>> wave;
  std::vector<int> chosen_mask;                    // one entry per cluster row
  double distance = 0.0;                           // discrete L2 distance of normalized densities
};

/// Exhaustive search over the nonzero cluster masks for the projection whose density is
/// closest to that of Phi. Ties go to fewer selected rows, then the lexicographically
/// smallest mask. Densities are channel sums of |.|^2 over `channels` interleaved components,
/// normalized with cell width h.
ProjectedState project_best_subset(std::span<const std::complex<double>> phi,
                                   const EigenSelection& sel, std::size_t channels, double h);

/// Channel-summed density of an interleaved wave, normalized to h * sum = 1.
std::vector<double> channel_density(std::span<const std::complex<double>> wave,
                                    std::size_t channels, double h);

}  // namespace sclab::projection
