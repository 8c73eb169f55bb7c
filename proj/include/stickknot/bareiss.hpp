#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace stickknot {

template <class Int>
using IntMatrix = std::vector<std::vector<Int>>;

/// Fraction-free Gaussian elimination. Every intermediate entry is a minor of
/// the input, so the integer type only has to hold the Hadamard bound.
/// The empty matrix has determinant 1.
template <class Int>
Int bareiss_determinant(IntMatrix<Int> m) {
  const std::size_t n = m.size();
  if (n == 0) return Int{1};
  Int sign{1};
  Int prev{1};
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == Int{0}) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == Int{0}) ++r;
      if (r == n) return Int{0};
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      m[i][k] = Int{0};
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace stickknot
