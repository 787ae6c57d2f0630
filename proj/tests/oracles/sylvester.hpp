#pragma once

#include <vector>

#include "g2/exact/polynomial.hpp"

namespace oracle {

/// Determinant of the Sylvester matrix, by Gaussian elimination over a field.
template <class K>
K sylvester_resultant(const g2::Polynomial<K>& p, const g2::Polynomial<K>& q) {
  const int m = p.degree(), n = q.degree();
  const int size = m + n;
  if (size == 0) return K(g2::Rational(1));
  std::vector<std::vector<K>> M(size, std::vector<K>(size, K(0)));
  for (int r = 0; r < n; ++r)
    for (int i = 0; i <= m; ++i) M[r][r + i] = p[m - i];
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= n; ++i) M[n + r][r + i] = q[n - i];
  K det(g2::Rational(1));
  for (int c = 0; c < size; ++c) {
    int piv = -1;
    for (int r = c; r < size; ++r)
      if (!g2::is_zero(M[r][c])) {
        piv = r;
        break;
      }
    if (piv < 0) return K(0);
    if (piv != c) {
      std::swap(M[piv], M[c]);
      det = K(0) - det;
    }
    det = det * M[c][c];
    for (int r = c + 1; r < size; ++r) {
      if (g2::is_zero(M[r][c])) continue;
      K f = M[r][c] / M[c][c];
      for (int k = c; k < size; ++k) M[r][k] = M[r][k] - f * M[c][k];
    }
  }
  return det;
}

}  // namespace oracle
