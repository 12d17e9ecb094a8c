#include "sclab/numerics/band_matrix.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "sclab/errors.hpp"

namespace sclab::numerics {

SymBandMatrix::SymBandMatrix(std::size_t n, std::size_t bandwidth)
    : n_(n), bandwidth_(bandwidth), bands_((bandwidth + 1) * n, 0.0) {
  if (n == 0) throw InvalidArgument("SymBandMatrix: n must be at least 1");
  if (bandwidth >= n) {
    throw InvalidArgument("SymBandMatrix: bandwidth " + std::to_string(bandwidth) +
                          " must be below n = " + std::to_string(n));
  }
}

bool SymBandMatrix::has_corners() const {
  if (corners_.empty()) return false;
  for (double v : corners_) {
    if (v != 0.0) return true;
  }
  return false;
}

bool SymBandMatrix::is_corner(std::size_t i, std::size_t j) const {
  if (i < j) std::swap(i, j);
  const std::size_t d = i - j;
  return d > bandwidth_ && n_ - d <= bandwidth_;
}

double* SymBandMatrix::slot(std::size_t i, std::size_t j) {
  if (i < j) std::swap(i, j);
  if (i >= n_) throw DimensionMismatch("SymBandMatrix: index out of range");
  const std::size_t d = i - j;
  if (d <= bandwidth_) return &bands_[d * n_ + j];
  if (n_ - d <= bandwidth_) {
    if (corners_.empty()) corners_.assign(bandwidth_ * bandwidth_, 0.0);
    return &corners_[(i - (n_ - bandwidth_)) * bandwidth_ + j];
  }
  return nullptr;
}

double SymBandMatrix::operator()(std::size_t i, std::size_t j) const {
  if (i < j) std::swap(i, j);
  if (i >= n_) throw DimensionMismatch("SymBandMatrix: index out of range");
  const std::size_t d = i - j;
  if (d <= bandwidth_) return bands_[d * n_ + j];
  if (n_ - d <= bandwidth_ && !corners_.empty()) {
    return corners_[(i - (n_ - bandwidth_)) * bandwidth_ + j];
  }
  return 0.0;
}

void SymBandMatrix::set(std::size_t i, std::size_t j, double value) {
  double* p = slot(i, j);
  if (p == nullptr) {
    if (value == 0.0) return;
    throw InvalidArgument("SymBandMatrix: entry (" + std::to_string(i) + ", " +
                          std::to_string(j) + ") lies outside the band and corners");
  }
  *p = value;
}

void SymBandMatrix::add(std::size_t i, std::size_t j, double value) {
  double* p = slot(i, j);
  if (p == nullptr) {
    if (value == 0.0) return;
    throw InvalidArgument("SymBandMatrix: entry outside the band and corners");
  }
  *p += value;
}

std::vector<double> SymBandMatrix::multiply(std::span<const double> x) const {
  if (x.size() != n_) throw DimensionMismatch("SymBandMatrix::multiply: length mismatch");
  std::vector<double> y(n_, 0.0);
  for_each_entry([&](std::size_t i, std::size_t j, double v) {
    y[i] += v * x[j];
    if (i != j) y[j] += v * x[i];
  });
  return y;
}

double SymBandMatrix::norm1() const {
  std::vector<double> col(n_, 0.0);
  for_each_entry([&](std::size_t i, std::size_t j, double v) {
    col[j] += std::abs(v);
    if (i != j) col[i] += std::abs(v);
  });
  double m = 0.0;
  for (double c : col) m = std::max(m, c);
  return m;
}

}  // namespace sclab::numerics
