#include "immaculate/exact_matrix.hpp"

#include <utility>

#include "immaculate/error.hpp"

namespace immaculate {

  Rational determinant(RationalMatrix m) {
    std::size_t const n = m.size();
    for (auto const& row : m) {
      if (row.size() != n) {
        throw invalid_input("determinant: matrix is not square");
      }
    }
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t pivot = c;
      while (pivot < n && m[pivot][c] == 0) {
        ++pivot;
      }
      if (pivot == n) {
        return 0;
      }
      if (pivot != c) {
        std::swap(m[pivot], m[c]);
        det = -det;
      }
      det *= m[c][c];
      for (std::size_t r = c + 1; r < n; ++r) {
        if (m[r][c] == 0) {
          continue;
        }
        Rational factor = m[r][c] / m[c][c];
        for (std::size_t k = c; k < n; ++k) {
          m[r][k] -= factor * m[c][k];
        }
      }
    }
    return det;
  }

  std::size_t rank(RationalMatrix m) {
    std::size_t const rows = m.size();
    std::size_t const cols = rows == 0 ? 0 : m.front().size();
    std::size_t       r    = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
      std::size_t pivot = r;
      while (pivot < rows && m[pivot][c] == 0) {
        ++pivot;
      }
      if (pivot == rows) {
        continue;
      }
      std::swap(m[pivot], m[r]);
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (m[i][c] == 0) {
          continue;
        }
        Rational factor = m[i][c] / m[r][c];
        for (std::size_t k = c; k < cols; ++k) {
          m[i][k] -= factor * m[r][k];
        }
      }
      ++r;
    }
    return r;
  }

}  // namespace immaculate
