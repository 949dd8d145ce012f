#pragma once

// Exact integer linear algebra on small dense matrices: column-style Hermite
// normal form, Smith normal form, and lattice membership / coset reduction.
// Matrices are row-major vectors of rows; all sizes here are at most 6x6 with
// entries bounded by small multiples of p, so long long arithmetic is exact.

#include <cstdlib>
#include <vector>

#include "uwk/common.hpp"

namespace uwk::intlin {

using Mat = std::vector<std::vector<Int>>;
using Vec = std::vector<Int>;

inline Mat identity(int n) {
  Mat m(n, Vec(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

// floor division (C++ division truncates toward zero)
inline Int floor_div(Int a, Int b) {
  Int q = a / b, r = a % b;
  return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

// Column Hermite form of a nonsingular n x n matrix: unimodular column
// operations make H upper triangular with H[i][i] > 0 and
// 0 <= H[i][k] < H[i][i] for k > i.  Columns of H span the same lattice.
inline Mat hermite_upper(Mat a) {
  const int n = static_cast<int>(a.size());
  auto col_axpy = [&](int dst, int src, Int c) {  // col_dst += c * col_src
    for (int r = 0; r < n; ++r) a[r][dst] += c * a[r][src];
  };
  auto col_swap = [&](int i, int j) {
    for (int r = 0; r < n; ++r) std::swap(a[r][i], a[r][j]);
  };
  for (int i = n - 1; i >= 0; --i) {
    // gcd-eliminate a[i][0..i-1] into a[i][i]
    for (int k = 0; k < i; ++k) {
      while (a[i][k] != 0) {
        if (a[i][i] == 0) {
          col_swap(i, k);
          continue;
        }
        Int q = floor_div(a[i][i], a[i][k]);
        col_axpy(i, k, -q);
        col_swap(i, k);
      }
    }
    check_internal(a[i][i] != 0, "hermite_upper: singular matrix");
    if (a[i][i] < 0)
      for (int r = 0; r < n; ++r) a[r][i] = -a[r][i];
    for (int k = i + 1; k < n; ++k) {
      Int q = floor_div(a[i][k], a[i][i]);
      if (q != 0) col_axpy(k, i, -q);
    }
  }
  return a;
}

// Reduce b to the canonical representative of b + L, where L is spanned by the
// columns of the Hermite form h (upper triangular, positive diagonal).
inline Vec reduce_mod_lattice(Vec b, const Mat& h) {
  const int n = static_cast<int>(h.size());
  for (int i = n - 1; i >= 0; --i) {
    Int q = floor_div(b[i], h[i][i]);
    if (q != 0)
      for (int r = 0; r <= i; ++r) b[r] -= q * h[r][i];
  }
  return b;
}

inline bool in_lattice(const Vec& b, const Mat& h) {
  Vec r = reduce_mod_lattice(b, h);
  for (Int x : r)
    if (x != 0) return false;
  return true;
}

// Smith normal form diagonal of a nonsingular integer matrix (elementary
// divisors d1 | d2 | ... ).  Entries stay small at the sizes used here.
inline Vec smith_diagonal(Mat a) {
  const int n = static_cast<int>(a.size());
  Vec diag;
  for (int t = 0; t < n; ++t) {
    // find a nonzero pivot in the trailing block
    int pi = -1, pj = -1;
    for (int i = t; i < n && pi < 0; ++i)
      for (int j = t; j < n; ++j)
        if (a[i][j] != 0) {
          pi = i;
          pj = j;
          break;
        }
    check_internal(pi >= 0, "smith_diagonal: singular matrix");
    std::swap(a[t], a[pi]);
    for (int i = 0; i < n; ++i) std::swap(a[i][t], a[i][pj]);
    bool again = true;
    while (again) {
      again = false;
      for (int i = t + 1; i < n; ++i)
        while (a[i][t] != 0) {
          Int q = floor_div(a[t][t], a[i][t]);
          for (int j = t; j < n; ++j) a[t][j] -= q * a[i][j];
          std::swap(a[t], a[i]);
        }
      for (int j = t + 1; j < n; ++j)
        while (a[t][j] != 0) {
          Int q = floor_div(a[t][t], a[t][j]);
          for (int i = t; i < n; ++i) a[i][t] -= q * a[i][j];
          for (int i = t; i < n; ++i) std::swap(a[i][t], a[i][j]);
          again = true;
        }
    }
    // divisibility cleanup so d_t divides the trailing block
    for (int i = t + 1; i < n; ++i)
      for (int j = t + 1; j < n; ++j)
        if (a[i][j] % a[t][t] != 0) {
          for (int k = t; k < n; ++k) a[t][k] += a[i][k];
          --t;
          i = n;
          break;
        }
  }
  for (int t = 0; t < n; ++t) diag.push_back(std::abs(a[t][t]));
  return diag;
}

}  // namespace uwk::intlin
