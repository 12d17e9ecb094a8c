#include "sclab/numerics/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <string>

#include "sclab/errors.hpp"

namespace sclab::numerics {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr std::size_t kQlLimit = 2048;

// Lower band of width b + 1 so one bulge fits below the original band.
class BandWork {
 public:
  BandWork(const SymBandMatrix& a) : n_(a.size()), b_(a.bandwidth()), w_(b_ + 2) {
    data_.assign(w_ * n_, 0.0);
    a.for_each_entry([&](std::size_t i, std::size_t j, double v) { ref(i, j) = v; });
  }

  std::size_t n() const { return n_; }
  std::size_t b() const { return b_; }

  double get(std::size_t i, std::size_t j) const {
    if (i < j) std::swap(i, j);
    const std::size_t d = i - j;
    return d < w_ ? data_[j * w_ + d] : 0.0;
  }
  double& ref(std::size_t i, std::size_t j) {
    if (i < j) std::swap(i, j);
    return data_[j * w_ + (i - j)];
  }

  // Rotation on rows and columns p, p + 1 chosen so that entry (p + 1, col) vanishes.
  void annihilate(std::size_t p, std::size_t col) {
    const std::size_t q = p + 1;
    const double x = get(p, col);
    const double y = get(q, col);
    if (y == 0.0) return;
    const double r = std::sqrt(x * x + y * y);
    const double c = x / r;
    const double s = y / r;

    // Off-diagonal pairs (p, k), (q, k); by the chase structure both lie inside storage.
    const std::size_t span = w_ - 1;
    const std::size_t klo = q > span ? q - span : 0;
    for (std::size_t k = klo; k < p; ++k) {
      double* base = &data_[k * w_];
      const double xp = base[p - k];
      const double xq = base[q - k];
      base[p - k] = c * xp + s * xq;
      base[q - k] = -s * xp + c * xq;
    }
    const std::size_t khi = std::min(n_ - 1, p + span);
    double* colp = &data_[p * w_];
    double* colq = &data_[q * w_];
    for (std::size_t k = q + 1; k <= khi; ++k) {
      const double xp = colp[k - p];
      const double xq = colq[k - q];
      colp[k - p] = c * xp + s * xq;
      colq[k - q] = -s * xp + c * xq;
    }
    const double app = get(p, p);
    const double aqq = get(q, q);
    const double apq = get(q, p);
    ref(p, p) = c * c * app + 2.0 * c * s * apq + s * s * aqq;
    ref(q, q) = s * s * app - 2.0 * c * s * apq + c * c * aqq;
    ref(q, p) = (c * c - s * s) * apq + c * s * (aqq - app);
    ref(q, col) = 0.0;
    ref(p, col) = r;
  }

 private:
  std::size_t n_, b_, w_;
  std::vector<double> data_;
};

// Banded LU with partial pivoting, LAPACK gbtrf storage.
class BandLU {
 public:
  BandLU(const SymBandMatrix& a, double shift, double tiny)
      : n_(a.size()), kl_(a.bandwidth()), ku_(a.bandwidth()), ld_(2 * kl_ + ku_ + 1) {
    ab_.assign(ld_ * n_, 0.0);
    piv_.resize(n_);
    a.for_each_entry([&](std::size_t i, std::size_t j, double v) {
      at(i, j) = v;
      if (i != j) at(j, i) = v;
    });
    for (std::size_t i = 0; i < n_; ++i) at(i, i) -= shift;

    for (std::size_t k = 0; k < n_; ++k) {
      const std::size_t last_row = std::min(n_ - 1, k + kl_);
      std::size_t p = k;
      double best = std::abs(at(k, k));
      for (std::size_t r = k + 1; r <= last_row; ++r) {
        if (std::abs(at(r, k)) > best) {
          best = std::abs(at(r, k));
          p = r;
        }
      }
      piv_[k] = p;
      const std::size_t last_col = std::min(n_ - 1, k + kl_ + ku_);
      if (p != k) {
        for (std::size_t j = k; j <= last_col; ++j) std::swap(at(k, j), at(p, j));
      }
      if (std::abs(at(k, k)) < tiny) at(k, k) = at(k, k) < 0.0 ? -tiny : tiny;
      const double pivot = at(k, k);
      for (std::size_t r = k + 1; r <= last_row; ++r) {
        const double l = at(r, k) / pivot;
        at(r, k) = l;
        if (l == 0.0) continue;
        for (std::size_t j = k + 1; j <= last_col; ++j) at(r, j) -= l * at(k, j);
      }
    }
  }

  void solve(std::vector<double>& x) const {
    for (std::size_t k = 0; k < n_; ++k) {
      if (piv_[k] != k) std::swap(x[k], x[piv_[k]]);
      const std::size_t last_row = std::min(n_ - 1, k + kl_);
      for (std::size_t r = k + 1; r <= last_row; ++r) x[r] -= at(r, k) * x[k];
    }
    for (std::size_t k = n_; k-- > 0;) {
      const std::size_t last_col = std::min(n_ - 1, k + kl_ + ku_);
      double s = x[k];
      for (std::size_t j = k + 1; j <= last_col; ++j) s -= at(k, j) * x[j];
      x[k] = s / at(k, k);
    }
  }

 private:
  double& at(std::size_t i, std::size_t j) { return ab_[j * ld_ + (kl_ + ku_ + i - j)]; }
  double at(std::size_t i, std::size_t j) const { return ab_[j * ld_ + (kl_ + ku_ + i - j)]; }

  std::size_t n_, kl_, ku_, ld_;
  std::vector<double> ab_;
  std::vector<std::size_t> piv_;
};

double norm2(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

double residual(const SymBandMatrix& a, const std::vector<double>& v, double lambda) {
  auto av = a.multiply(v);
  double s = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double r = av[i] - lambda * v[i];
    s += r * r;
  }
  return std::sqrt(s);
}

void orthogonalize(std::vector<double>& v, const std::vector<std::vector<double>>& basis) {
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& u : basis) {
      double d = 0.0;
      for (std::size_t i = 0; i < v.size(); ++i) d += u[i] * v[i];
      for (std::size_t i = 0; i < v.size(); ++i) v[i] -= d * u[i];
    }
  }
}

std::pair<double, double> gershgorin(const Tridiagonal& t) {
  const std::size_t n = t.diag.size();
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t i = 0; i < n; ++i) {
    double r = 0.0;
    if (i > 0) r += std::abs(t.offdiag[i - 1]);
    if (i + 1 < n) r += std::abs(t.offdiag[i]);
    lo = std::min(lo, t.diag[i] - r);
    hi = std::max(hi, t.diag[i] + r);
  }
  const double pad = kEps * std::max(std::abs(lo), std::abs(hi)) * n + kEps;
  return {lo - pad, hi + pad};
}

}  // namespace

std::vector<std::size_t> fold_order(std::size_t n) {
  std::vector<std::size_t> order(n);
  for (std::size_t k = 0; k < n; ++k) order[k] = (k % 2 == 0) ? k / 2 : n - 1 - k / 2;
  return order;
}

SymBandMatrix fold_periodic(const SymBandMatrix& a, const std::vector<std::size_t>& order) {
  const std::size_t n = a.size();
  if (order.size() != n) throw DimensionMismatch("fold_periodic: permutation length mismatch");
  std::vector<std::size_t> pos(n);
  for (std::size_t k = 0; k < n; ++k) pos[order[k]] = k;
  std::size_t width = 0;
  a.for_each_entry([&](std::size_t i, std::size_t j, double v) {
    if (v == 0.0) return;
    const std::size_t pi = pos[i], pj = pos[j];
    width = std::max(width, pi > pj ? pi - pj : pj - pi);
  });
  SymBandMatrix folded(n, std::min(width, n - 1));
  a.for_each_entry([&](std::size_t i, std::size_t j, double v) {
    if (v != 0.0) folded.set(pos[i], pos[j], v);
  });
  return folded;
}

Tridiagonal band_to_tridiagonal(const SymBandMatrix& a) {
  if (a.has_corners()) throw InvalidArgument("band_to_tridiagonal: fold the corners first");
  BandWork w(a);
  const std::size_t n = w.n();
  const std::size_t b = w.b();
  if (b > 1) {
    for (std::size_t j = 0; j + 2 < n; ++j) {
      const std::size_t kmax = std::min(b, n - 1 - j);
      for (std::size_t k = kmax; k >= 2; --k) {
        const std::size_t i = j + k;
        if (w.get(i, j) == 0.0) continue;
        w.annihilate(i - 1, j);
        std::size_t col = i - 1;
        std::size_t row = col + b + 1;
        while (row < n && w.get(row, col) != 0.0) {
          w.annihilate(row - 1, col);
          col = row - 1;
          row = col + b + 1;
        }
      }
    }
  }
  Tridiagonal t;
  t.diag.resize(n);
  t.offdiag.resize(n > 0 ? n - 1 : 0);
  for (std::size_t i = 0; i < n; ++i) t.diag[i] = w.get(i, i);
  for (std::size_t i = 0; i + 1 < n; ++i) t.offdiag[i] = w.get(i + 1, i);
  return t;
}

std::vector<double> tridiagonal_eigenvalues_ql(Tridiagonal t) {
  std::vector<double>& d = t.diag;
  const std::size_t n = d.size();
  std::vector<double> e(n, 0.0);
  for (std::size_t i = 0; i + 1 < n; ++i) e[i] = t.offdiag[i];

  for (std::size_t l = 0; l < n; ++l) {
    int iter = 0;
    std::size_t m;
    do {
      for (m = l; m + 1 < n; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= kEps * dd) break;
      }
      if (m == l) break;
      if (++iter > 60) throw ConvergenceFailure("tridiagonal QL did not converge", std::abs(e[l]));

      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0, c = 1.0, p = 0.0;
      bool underflow = false;
      for (std::size_t i = m; i-- > l;) {
        const double f = s * e[i];
        const double bb = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == 0.0) {
          d[i + 1] -= p;
          e[m] = 0.0;
          underflow = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * bb;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - bb;
      }
      if (underflow) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    } while (true);
  }
  std::sort(d.begin(), d.end());
  return d;
}

std::size_t sturm_count(const Tridiagonal& t, double x) {
  const std::size_t n = t.diag.size();
  double scale = 0.0;
  for (double v : t.diag) scale = std::max(scale, std::abs(v));
  for (double v : t.offdiag) scale = std::max(scale, std::abs(v));
  const double pivmin = std::max(std::numeric_limits<double>::min(), kEps * kEps * scale);
  std::size_t count = 0;
  double q = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double e2 = i > 0 ? t.offdiag[i - 1] * t.offdiag[i - 1] : 0.0;
    q = t.diag[i] - x - (i > 0 ? e2 / q : 0.0);
    if (std::abs(q) < pivmin) q = -pivmin;
    if (q < 0.0) ++count;
  }
  return count;
}

double tridiagonal_eigenvalue_bisect(const Tridiagonal& t, std::size_t k) {
  if (k >= t.diag.size()) throw DimensionMismatch("tridiagonal_eigenvalue_bisect: index out of range");
  auto [lo, hi] = gershgorin(t);
  const double floor = kEps * std::max(std::abs(lo), std::abs(hi));
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (hi - lo <= 2.0 * kEps * std::max(std::abs(lo), std::abs(hi)) * 0.5 + floor) break;
    if (sturm_count(t, mid) > k) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::vector<double> tridiagonal_eigenvalues_near(const Tridiagonal& t, double target,
                                                 std::size_t count) {
  const std::size_t n = t.diag.size();
  if (count > n) throw DimensionMismatch("eigenvalue count exceeds matrix dimension");
  std::vector<double> candidates;
  if (n <= kQlLimit) {
    candidates = tridiagonal_eigenvalues_ql(t);
  } else {
    const std::size_t below = sturm_count(t, target);
    const std::size_t first = below >= count ? below - count : 0;
    const std::size_t last = std::min(n, below + count);
    for (std::size_t k = first; k < last; ++k) {
      candidates.push_back(tridiagonal_eigenvalue_bisect(t, k));
    }
  }
  std::stable_sort(candidates.begin(), candidates.end(), [&](double x, double y) {
    return std::abs(x - target) < std::abs(y - target);
  });
  candidates.resize(count);
  return candidates;
}

std::vector<EigenPair> eigs_near(const SymBandMatrix& a, double target, std::size_t count) {
  const std::size_t n = a.size();
  if (count > n) {
    throw DimensionMismatch("eigs_near: count " + std::to_string(count) +
                            " exceeds dimension " + std::to_string(n));
  }
  if (count == 0) return {};

  const auto order = fold_order(n);
  const SymBandMatrix folded = a.has_corners() ? fold_periodic(a, order) : a;
  const bool permuted = a.has_corners();

  const double anorm = std::max(a.norm1(), std::numeric_limits<double>::min());
  const auto values = tridiagonal_eigenvalues_near(band_to_tridiagonal(folded), target, count);

  const double tiny = kEps * anorm;
  const double accept = 1e-10 * anorm;
  const double limit = 1e-8 * anorm;
  constexpr int kMaxIterations = 8;

  std::mt19937_64 rng(0x5eed5eedULL);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);

  std::vector<std::vector<double>> basis;
  std::vector<EigenPair> out;
  for (double lambda : values) {
    BandLU lu(folded, lambda, tiny);
    std::vector<double> v(n);
    for (double& x : v) x = uni(rng);
    orthogonalize(v, basis);
    double nv = norm2(v);
    for (double& x : v) x /= nv;

    double res = std::numeric_limits<double>::infinity();
    for (int it = 0; it < kMaxIterations; ++it) {
      lu.solve(v);
      orthogonalize(v, basis);
      nv = norm2(v);
      if (!(nv > 0.0) || !std::isfinite(nv)) break;
      for (double& x : v) x /= nv;
      res = residual(folded, v, lambda);
      if (res <= accept && it >= 1) break;
    }
    if (!(res <= limit)) {
      throw ConvergenceFailure("eigs_near: inverse iteration stalled near " + std::to_string(lambda),
                               res);
    }
    basis.push_back(v);

    EigenPair pair;
    pair.value = lambda;
    if (permuted) {
      pair.vector.assign(n, 0.0);
      for (std::size_t k = 0; k < n; ++k) pair.vector[order[k]] = v[k];
    } else {
      pair.vector = v;
    }
    out.push_back(std::move(pair));
  }
  return out;
}

}  // namespace sclab::numerics
