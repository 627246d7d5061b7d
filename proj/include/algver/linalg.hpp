#pragma once

#include <optional>

#include "algver/scalars.hpp"

namespace algver {

// Gaussian elimination over an exact field scalar.
template <class K>
K mat_det(Mat<K> m) {
  int n = static_cast<int>(m.rows());
  K det = m(0, 0) - m(0, 0) + 1;  // one, in the right field
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int r = c; r < n; ++r)
      if (!m(r, c).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) return m(0, 0) - m(0, 0);
    if (pivot != c) {
      m.row(pivot).swap(m.row(c));
      det = -det;
    }
    det = det * m(c, c);
    K inv = m(c, c).inverse();
    for (int r = c + 1; r < n; ++r) {
      K f = m(r, c) * inv;
      for (int k = c; k < n; ++k) m(r, k) = m(r, k) - f * m(c, k);
    }
  }
  return det;
}

template <class K>
std::optional<Mat<K>> mat_inverse(Mat<K> m) {
  int n = static_cast<int>(m.rows());
  Mat<K> inv(n, n);
  K zero = m(0, 0) - m(0, 0);
  K one = zero + 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = i == j ? one : zero;
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int r = c; r < n; ++r)
      if (!m(r, c).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) return std::nullopt;
    if (pivot != c) {
      m.row(pivot).swap(m.row(c));
      inv.row(pivot).swap(inv.row(c));
    }
    K pinv = m(c, c).inverse();
    for (int k = 0; k < n; ++k) {
      m(c, k) = m(c, k) * pinv;
      inv(c, k) = inv(c, k) * pinv;
    }
    for (int r = 0; r < n; ++r) {
      if (r == c || m(r, c).is_zero()) continue;
      K f = m(r, c);
      for (int k = 0; k < n; ++k) {
        m(r, k) = m(r, k) - f * m(c, k);
        inv(r, k) = inv(r, k) - f * inv(c, k);
      }
    }
  }
  return inv;
}

}  // namespace algver
