#ifndef BUMPFORGE_LINEAR_SOLVE_HPP
#define BUMPFORGE_LINEAR_SOLVE_HPP

#include <cstddef>
#include <vector>

#include "bumpforge/double_double.hpp"
#include "bumpforge/errors.hpp"

namespace bumpforge {

// Dense Gaussian elimination with partial pivoting, row-major n x n.
// The systems here are small (n + 2 <= ~20); stability comes from the
// DD scalar, not the algorithm.
template <class T>
std::vector<T> solve_dense(std::vector<T> a, std::vector<T> b) {
  using std::abs;
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    T best = abs(a[col * n + col]);
    for (std::size_t row = col + 1; row < n; ++row) {
      T mag = abs(a[row * n + col]);
      if (best < mag) {
        best = mag;
        piv = row;
      }
    }
    if (to_double(best) == 0.0)
      throw SingularSystemError("solve_dense: zero pivot column " + std::to_string(col));
    if (piv != col) {
      for (std::size_t j = col; j < n; ++j) std::swap(a[piv * n + j], a[col * n + j]);
      std::swap(b[piv], b[col]);
    }
    for (std::size_t row = col + 1; row < n; ++row) {
      T factor = a[row * n + col] / a[col * n + col];
      a[row * n + col] = T(0.0);
      for (std::size_t j = col + 1; j < n; ++j) a[row * n + j] -= factor * a[col * n + j];
      b[row] -= factor * b[col];
    }
  }
  std::vector<T> x(n);
  for (std::size_t i = n; i-- > 0;) {
    T acc = b[i];
    for (std::size_t j = i + 1; j < n; ++j) acc -= a[i * n + j] * x[j];
    x[i] = acc / a[i * n + i];
  }
  return x;
}

}  // namespace bumpforge

#endif
