#pragma once

#include <vector>

#include "immaculate/numbers.hpp"

namespace immaculate {

  //! Values indexed from 0.
  using SequenceTable = std::vector<Integer>;

  //! a(0) = 1, a(n) = sum_{k<n} C(n-1, k)^2 a(k).
  SequenceTable a_sequence(int max_n);

  //! b(0) = 1, b(n) = sum_{k<n} (n-1)!/k! b(k).
  SequenceTable b_sequence(int max_n);

  //! Sum over all compositions alpha of n of g_count(alpha)^2, computed by
  //! enumerating standard immaculate tableaux.
  Integer dim_immaculate_algebra(int n);

}  // namespace immaculate
