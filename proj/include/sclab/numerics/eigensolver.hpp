#pragma once

#include <cstddef>
#include <vector>

#include "sclab/numerics/band_matrix.hpp"

namespace sclab::numerics {

struct EigenPair {
  double value = 0.0;
  std::vector<double> vector;
};

struct Tridiagonal {
  std::vector<double> diag;
  std::vector<double> offdiag;  // offdiag[i] couples i and i+1
};

/// The `count` eigenpairs of `a` closest to `target`, sorted by |value - target|.
/// Eigenvectors are orthonormal; residuals satisfy |Av - value v| <= 1e-8 |A|_1.
std::vector<EigenPair> eigs_near(const SymBandMatrix& a, double target, std::size_t count);

/// Permutation [0, n-1, 1, n-2, ...]; position k of the folded matrix holds row order[k].
std::vector<std::size_t> fold_order(std::size_t n);

/// P A P^T for the fold permutation; a cyclic bandwidth b becomes a plain bandwidth 2b.
SymBandMatrix fold_periodic(const SymBandMatrix& a, const std::vector<std::size_t>& order);

/// Orthogonal similarity reduction of a corner-free band matrix by Givens bulge chasing.
Tridiagonal band_to_tridiagonal(const SymBandMatrix& a);

/// All eigenvalues, ascending, by implicit-shift QL.
std::vector<double> tridiagonal_eigenvalues_ql(Tridiagonal t);

/// Number of eigenvalues strictly below x.
std::size_t sturm_count(const Tridiagonal& t, double x);

/// The k-th smallest eigenvalue (k from 0) by bisection.
double tridiagonal_eigenvalue_bisect(const Tridiagonal& t, std::size_t k);

/// Eigenvalues of t closest to target, sorted by distance; QL for small n, bisection otherwise.
std::vector<double> tridiagonal_eigenvalues_near(const Tridiagonal& t, double target,
                                                 std::size_t count);

}  // namespace sclab::numerics
