#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace ncrw {

// Bareiss fraction-free elimination. Exact over any integral domain with
// exact division; the interior divisions are guaranteed to be exact.
template <class T>
T exact_determinant(std::vector<std::vector<T>> m) {
  const std::size_t n = m.size();
  if (n == 0) return T(1);
  T prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == T(0)) {
      std::size_t pivot = k + 1;
      while (pivot < n && m[pivot][k] == T(0)) ++pivot;
      if (pivot == n) return T(0);
      std::swap(m[k], m[pivot]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = T(0);
    }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

}  // namespace ncrw
