#include "sclab/projection/projection.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "sclab/errors.hpp"

namespace sclab::projection {

EigenSelection cluster_eigenvalues(std::vector<EigenPair> pairs, double E, double M) {
  if (!(M > 0.0)) throw InvalidArgument("cluster_eigenvalues: M must be positive");
  if (pairs.empty()) throw EmptySelection("cluster_eigenvalues: no eigenpairs supplied");
  EigenSelection sel;
  sel.E0 = pairs.front().value;
  for (const auto& p : pairs) {
    if (std::abs(p.value - E) < std::abs(sel.E0 - E)) sel.E0 = p.value;
  }
  const double keep = std::pow(M, -0.5);
  const double same = std::pow(M, -0.75);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (std::abs(pairs[i].value - E) < keep) sel.kept.push_back(i);
  }
  if (sel.kept.empty()) {
    throw EmptySelection("cluster_eigenvalues: no eigenvalue within M^(-1/2) = " +
                         std::to_string(keep) + " of E = " + std::to_string(E));
  }
  const std::size_t J = sel.kept.size();
  sel.cluster_matrix.assign(J, std::vector<int>(J, 0));
  std::vector<bool> claimed(J, false);
  for (std::size_t r = 0; r < J; ++r) {
    for (std::size_t c = 0; c < J; ++c) {
      if (claimed[c]) continue;
      const double gap = std::abs(pairs[sel.kept[r]].value - pairs[sel.kept[c]].value);
      if (gap < same) {
        sel.cluster_matrix[r][c] = 1;
        claimed[c] = true;
      }
    }
  }
  sel.pairs = std::move(pairs);
  return sel;
}

std::vector<double> channel_density(std::span<const std::complex<double>> wave,
                                    std::size_t channels, double h) {
  const std::size_t n = wave.size() / channels;
  std::vector<double> rho(n, 0.0);
  double total = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t c = 0; c < channels; ++c) rho[j] += std::norm(wave[j * channels + c]);
    total += rho[j];
  }
  total *= h;
  if (total > 0.0) {
    for (double& v : rho) v /= total;
  }
  return rho;
}

ProjectedState project_best_subset(std::span<const std::complex<double>> phi,
                                   const EigenSelection& sel, std::size_t channels, double h) {
  const std::size_t J = sel.kept.size();
  if (J == 0) throw EmptySelection("project_best_subset: empty selection");
  if (J > 10) throw InvalidArgument("project_best_subset: too many clusters to enumerate");
  const std::size_t len = phi.size();
  for (std::size_t idx : sel.kept) {
    if (sel.pairs[idx].vector.size() != len) throw DimensionMismatch("project_best_subset: length mismatch");
  }
  if (channels == 0 || len % channels != 0) throw DimensionMismatch("project_best_subset: bad channel count");

  ProjectedState out;
  out.coefficients.resize(J);
  double phi_norm2 = 0.0;
  for (const auto& z : phi) phi_norm2 += std::norm(z);
  for (std::size_t k = 0; k < J; ++k) {
    const auto& y = sel.pairs[sel.kept[k]].vector;
    std::complex<double> c{};
    for (std::size_t i = 0; i < len; ++i) c += y[i] * phi[i];
    out.coefficients[k] = c;
  }

  const auto target = channel_density(phi, channels, h);
  const double zero_level = 1e-24 * phi_norm2;

  double best = std::numeric_limits<double>::infinity();
  std::vector<int> best_mask;
  int best_count = 0;
  std::vector<std::complex<double>> wave(len);
  for (std::size_t bits = 1; bits < (std::size_t{1} << J); ++bits) {
    std::vector<int> mask(J);
    int count = 0;
    for (std::size_t r = 0; r < J; ++r) {
      // Row r corresponds to the most significant position so that lexicographic order of
      // masks matches numeric order of `bits`.
      mask[r] = static_cast<int>((bits >> (J - 1 - r)) & 1U);
      count += mask[r];
    }
    std::fill(wave.begin(), wave.end(), std::complex<double>{});
    double weight = 0.0;
    for (std::size_t c = 0; c < J; ++c) {
      int w = 0;
      for (std::size_t r = 0; r < J; ++r) w += mask[r] * sel.cluster_matrix[r][c];
      if (w == 0) continue;
      const auto& y = sel.pairs[sel.kept[c]].vector;
      const std::complex<double> coef = static_cast<double>(w) * out.coefficients[c];
      weight += std::norm(coef);
      for (std::size_t i = 0; i < len; ++i) wave[i] += coef * y[i];
    }
    if (!(weight > zero_level)) continue;
    const auto rho = channel_density(wave, channels, h);
    double d = 0.0;
    for (std::size_t j = 0; j < rho.size(); ++j) d += (rho[j] - target[j]) * (rho[j] - target[j]);
    d = std::sqrt(d * h);
    const bool first = best_mask.empty();
    const double tol = first ? 0.0 : 1e-12 * (1.0 + best);
    const bool better = first || d < best - tol;
    const bool tie = !better && std::abs(d - best) <= tol;
    // Enumeration runs in increasing lexicographic order, so a tie only wins on count.
    if (better || (tie && count < best_count)) {
      best = d;
      best_mask = mask;
      best_count = count;
      out.wave = wave;
    }
  }
  if (best_mask.empty()) {
    throw OrthogonalTrialState("project_best_subset: trial state is orthogonal to every kept eigenvector");
  }
  out.chosen_mask = best_mask;
  out.distance = best;
  return out;
}

}  // namespace sclab::projection
