#pragma once

#include <cstddef>
#include <vector>

#include "immaculate/numbers.hpp"

namespace immaculate {

  using RationalMatrix = std::vector<std::vector<Rational>>;

  //! Determinant of a square matrix by fraction-exact Gaussian elimination.
  Rational determinant(RationalMatrix m);

  //! Row rank by fraction-exact Gaussian elimination.
  std::size_t rank(RationalMatrix m);

}  // namespace immaculate
