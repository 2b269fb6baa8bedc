#pragma once

// Row-major dense LU with partial pivoting, shared by the determinant and
// solve routines. Works for double and std::complex<double>.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

namespace qpoly::detail {

template <class T>
struct LuResult {
  std::vector<T> lu;
  std::vector<std::size_t> perm;
  std::size_t n = 0;
  int sign = 1;
  /// Smallest |pivot| met during elimination.
  double min_pivot = 0.0;
};

template <class T>
LuResult<T> lu_decompose(std::vector<T> a, std::size_t n) {
  LuResult<T> r;
  r.n = n;
  r.perm.resize(n);
  for (std::size_t i = 0; i < n; ++i) r.perm[i] = i;
  r.min_pivot = n == 0 ? 0.0 : INFINITY;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t best = col;
    double best_abs = std::abs(a[col * n + col]);
    for (std::size_t row = col + 1; row < n; ++row) {
      const double v = std::abs(a[row * n + col]);
      if (v > best_abs) {
        best_abs = v;
        best = row;
      }
    }
    r.min_pivot = std::min(r.min_pivot, best_abs);
    if (best != col) {
      for (std::size_t k = 0; k < n; ++k) std::swap(a[col * n + k], a[best * n + k]);
      std::swap(r.perm[col], r.perm[best]);
      r.sign = -r.sign;
    }
    if (best_abs == 0.0) continue;
    const T pivot = a[col * n + col];
    for (std::size_t row = col + 1; row < n; ++row) {
      const T factor = a[row * n + col] / pivot;
      a[row * n + col] = factor;
      if (factor == T(0)) continue;
      for (std::size_t k = col + 1; k < n; ++k) a[row * n + k] -= factor * a[col * n + k];
    }
  }
  r.lu = std::move(a);
  return r;
}

template <class T>
T lu_determinant(const LuResult<T>& r) {
  T det = T(r.sign);
  for (std::size_t i = 0; i < r.n; ++i) det *= r.lu[i * r.n + i];
  return det;
}

template <class T>
std::vector<T> lu_solve(const LuResult<T>& r, const std::vector<T>& b) {
  const std::size_t n = r.n;
  std::vector<T> x(n);
  for (std::size_t i = 0; i < n; ++i) {
    T s = b[r.perm[i]];
    for (std::size_t k = 0; k < i; ++k) s -= r.lu[i * n + k] * x[k];
    x[i] = s;
  }
  for (std::size_t i = n; i-- > 0;) {
    T s = x[i];
    for (std::size_t k = i + 1; k < n; ++k) s -= r.lu[i * n + k] * x[k];
    x[i] = s / r.lu[i * n + i];
  }
  return x;
}

}  // namespace qpoly::detail
