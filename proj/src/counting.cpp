#include "immaculate/counting.hpp"

#include <algorithm>

#include "immaculate/compositions.hpp"
#include "immaculate/error.hpp"
#include "immaculate/tableaux.hpp"

namespace immaculate {

  Integer binomial(unsigned long n, unsigned long k) {
    if (k > n) {
      return 0;
    }
    k = std::min(k, n - k);
    Integer result = 1;
    // Exact at every step: result is C(n - k + i, i) after iteration i.
    for (unsigned long i = 1; i <= k; ++i) {
      result *= n - k + i;
      result /= i;
    }
    return result;
  }

  Integer factorial(unsigned long n) {
    Integer result = 1;
    for (unsigned long i = 2; i <= n; ++i) {
      result *= i;
    }
    return result;
  }

  SequenceTable a_sequence(int max_n) {
    if (max_n < 0) {
      throw invalid_input("a_sequence: max_n must be nonnegative");
    }
    SequenceTable a{1};
    for (int n = 1; n <= max_n; ++n) {
      Integer sum = 0;
      for (int k = 0; k < n; ++k) {
        Integer c = binomial(static_cast<unsigned long>(n - 1),
                             static_cast<unsigned long>(k));
        sum += c * c * a[static_cast<std::size_t>(k)];
      }
      a.push_back(sum);
    }
    return a;
  }

  SequenceTable b_sequence(int max_n) {
    if (max_n < 0) {
      throw invalid_input("b_sequence: max_n must be nonnegative");
    }
    SequenceTable b{1};
    for (int n = 1; n <= max_n; ++n) {
      Integer sum = 0;
      for (int k = 0; k < n; ++k) {
        // (n-1)!/k! is the falling product (k+1)(k+2)...(n-1).
        Integer ratio = 1;
        for (int j = k + 1; j <= n - 1; ++j) {
          ratio *= j;
        }
        sum += ratio * b[static_cast<std::size_t>(k)];
      }
      b.push_back(sum);
    }
    return b;
  }

  Integer dim_immaculate_algebra(int n) {
    if (n < 1) {
      throw invalid_input("dim_immaculate_algebra: n must be positive");
    }
    Integer sum = 0;
    for (auto const& alpha : compositions_of(n)) {
      Integer g = g_count(alpha);
      sum += g * g;
    }
    return sum;
  }

}  // namespace immaculate
