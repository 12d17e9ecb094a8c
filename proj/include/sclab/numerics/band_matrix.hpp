#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace sclab::numerics {

/// Real symmetric band matrix with optional periodic wrap-around entries.
///
/// Only the lower triangle is stored. Entry (i, j), i >= j, lives in the band
/// when i - j <= bandwidth and in the corner block when the cyclic distance
/// n - (i - j) is at most bandwidth.
class SymBandMatrix {
 public:
  SymBandMatrix(std::size_t n, std::size_t bandwidth);

  std::size_t size() const { return n_; }
  std::size_t bandwidth() const { return bandwidth_; }
  bool has_corners() const;

  double operator()(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, double value);
  void add(std::size_t i, std::size_t j, double value);

  std::vector<double> multiply(std::span<const double> x) const;

  /// Maximum absolute column sum; equals the induced 1-norm.
  double norm1() const;

  /// Visits every stored lower-triangle entry as f(i, j, value) with i >= j.
  template <class F>
  void for_each_entry(F&& f) const {
    for (std::size_t d = 0; d <= bandwidth_; ++d) {
      for (std::size_t j = 0; j + d < n_; ++j) {
        f(j + d, j, bands_[d * n_ + j]);
      }
    }
    if (!corners_.empty()) {
      for (std::size_t r = 0; r < bandwidth_; ++r) {
        for (std::size_t j = 0; j < bandwidth_; ++j) {
          const std::size_t i = n_ - bandwidth_ + r;
          if (is_corner(i, j)) f(i, j, corners_[r * bandwidth_ + j]);
        }
      }
    }
  }

 private:
  bool is_corner(std::size_t i, std::size_t j) const;
  double* slot(std::size_t i, std::size_t j);

  std::size_t n_;
  std::size_t bandwidth_;
  std::vector<double> bands_;
  std::vector<double> corners_;
};

}  // namespace sclab::numerics
