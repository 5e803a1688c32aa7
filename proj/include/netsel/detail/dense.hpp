#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "netsel/errors.hpp"

namespace netsel::detail {

// Row-major dense LU factorization with partial pivoting, sized for the
// library's dense-solve threshold. P*A = L*U stored in place.
class DenseLu {
 public:
  DenseLu(std::vector<double> a, int n) : a_(std::move(a)), n_(n), piv_(n) {
    for (int i = 0; i < n_; ++i) piv_[i] = i;
    for (int col = 0; col < n_; ++col) {
      int best = col;
      double best_abs = std::fabs(at(col, col));
      for (int r = col + 1; r < n_; ++r) {
        const double v = std::fabs(at(r, col));
        if (v > best_abs) {
          best_abs = v;
          best = r;
        }
      }
      if (best_abs == 0.0) throw DivergenceError("singular linear system in walk-sum solve");
      if (best != col) {
        std::swap(piv_[col], piv_[best]);
        for (int c = 0; c < n_; ++c) std::swap(at(col, c), at(best, c));
      }
      const double inv = 1.0 / at(col, col);
      for (int r = col + 1; r < n_; ++r) {
        const double f = at(r, col) * inv;
        at(r, col) = f;
        if (f == 0.0) continue;
        const double* urow = &a_[static_cast<std::size_t>(col) * n_];
        double* rrow = &a_[static_cast<std::size_t>(r) * n_];
        for (int c = col + 1; c < n_; ++c) rrow[c] -= f * urow[c];
      }
    }
  }

  // Solve A x = b in place.
  void solve(std::vector<double>& b) const {
    std::vector<double> y(n_);
    for (int i = 0; i < n_; ++i) y[i] = b[piv_[i]];
    for (int i = 0; i < n_; ++i) {
      const double* row = &a_[static_cast<std::size_t>(i) * n_];
      double s = y[i];
      for (int j = 0; j < i; ++j) s -= row[j] * y[j];
      y[i] = s;
    }
    for (int i = n_ - 1; i >= 0; --i) {
      const double* row = &a_[static_cast<std::size_t>(i) * n_];
      double s = y[i];
      for (int j = i + 1; j < n_; ++j) s -= row[j] * y[j];
      y[i] = s / row[i];
    }
    b = std::move(y);
  }

 private:
  double& at(int r, int c) { return a_[static_cast<std::size_t>(r) * n_ + c]; }
  const double& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * n_ + c]; }

  std::vector<double> a_;
  int n_;
  std::vector<int> piv_;
};

}  // namespace netsel::detail
