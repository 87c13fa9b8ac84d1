#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "immaculate/compositions.hpp"

namespace immaculate {

  //! Sorted, duplicate-free set of positive integers.
  using IntSet = std::vector<int>;

  //! Strictly decreasing tuple of nonnegative integers ending in 0.
  using ImmacutationClass = std::vector<int>;

  //! A tuple of 2 * len(klass) integer sets governed by its class.
  //!
  //! entries[0], entries[1] are subsets of {1..order-1} of size
  //! order - 1 - klass[0]; for i >= 1, entries[2i], entries[2i+1] are subsets
  //! of {1..klass[i-1]-1} of size klass[i-1] - 1 - klass[i].
  struct Immacutation {
    int                 order = 0;
    ImmacutationClass   klass;
    std::vector<IntSet> entries;

    bool operator==(Immacutation const&) const = default;
  };

  //! True iff every cardinality and subset constraint holds.
  bool validate(Immacutation const& t);

  //! All classes admissible for order n, sorted so that their shapes follow
  //! triangle_compare.
  std::vector<ImmacutationClass> immacutation_classes(int n);

  //! alpha_i = lambda_{i-1} - lambda_i with lambda_0 = n.
  Composition class_to_shape(int n, ImmacutationClass const& klass);
  //! lambda_i = n - (alpha_1 + ... + alpha_i).
  ImmacutationClass shape_to_class(Composition const& shape);

  //! Throws invalid_input when validate(t) fails.
  Composition shape_of(Immacutation const& t);

  //! All order-n immacutations sorted by immacutation_compare.
  std::vector<Immacutation> enumerate_immacutations(int n);
  //! Only those of the given class (in order); throws on an inadmissible
  //! class.
  std::vector<Immacutation>
  enumerate_immacutations(int n, ImmacutationClass const& klass);

  //! Shapes under triangle_compare first, then entries lexicographically with
  //! each set read as its ascending word and the empty set read as (0).
  //! Throws invalid_input for different orders.
  std::strong_ordering immacutation_compare(Immacutation const& a,
                                            Immacutation const& b);

  //! All k-subsets of {1..m} in lexicographic order.
  std::vector<IntSet> k_subsets(int m, int k);

  //! E.g. "({}, {}, {4}, {2})".
  std::string to_text(Immacutation const& t);

}  // namespace immaculate
