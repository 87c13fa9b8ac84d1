#include <doctest.h>

#include <set>

#include "immaculate/bijections.hpp"
#include "immaculate/counting.hpp"
#include "immaculate/error.hpp"
#include "immaculate/immacutations.hpp"

using namespace immaculate;

namespace {
  Immacutation imm(int order, ImmacutationClass klass, std::vector<IntSet> entries) {
    return {order, std::move(klass), std::move(entries)};
  }

  // Oracle: every tuple of subsets with the right sizes, one class at a time.
  std::size_t brute_force_count(int n) {
    std::size_t total = 0;
    for (auto const& klass : immacutation_classes(n)) {
      std::size_t count = 1;
      int         prev  = n;
      for (int lambda : klass) {
        count *= k_subsets(prev - 1, prev - 1 - lambda).size();
        count *= k_subsets(prev - 1, prev - 1 - lambda).size();
        prev = lambda;
      }
      total += count;
    }
    return total;
  }
}  // namespace

TEST_CASE("validate") {
  CHECK(validate(imm(4, {3, 2, 0}, {{}, {}, {}, {}, {1}, {1}})));
  CHECK(validate(imm(6, {5, 3, 2, 0}, {{}, {}, {4}, {2}, {}, {}, {1}, {1}})));
  CHECK_FALSE(validate(imm(3, {2, 0}, {{1}, {}, {1}, {1}})));
  CHECK_FALSE(validate(imm(3, {2, 1}, {{}, {}, {}, {}})));
  CHECK_FALSE(validate(imm(3, {0}, {{2, 1}, {1, 2}})));
  CHECK_FALSE(validate(imm(3, {0}, {{1, 3}, {1, 2}})));
  CHECK_FALSE(validate(imm(3, {0}, {{1, 2}})));
}

TEST_CASE("classes and shapes") {
  CHECK(immacutation_classes(3)
        == std::vector<ImmacutationClass>{{2, 1, 0}, {0}, {2, 0}, {1, 0}});
  CHECK(class_to_shape(6, {5, 3, 2, 0}) == Composition{1, 2, 1, 2});
  CHECK(shape_to_class({1, 2, 1, 2}) == ImmacutationClass{5, 3, 2, 0});
  CHECK(shape_of(imm(3, {0}, {{1, 2}, {1, 2}})) == Composition{3});
  CHECK(shape_of(imm(4, {3, 2, 1, 0}, std::vector<IntSet>(8)))
        == Composition{1, 1, 1, 1});
  for (int n = 1; n <= 7; ++n) {
    for (auto const& alpha : compositions_of(n)) {
      CHECK(class_to_shape(n, shape_to_class(alpha)) == alpha);
    }
  }
  CHECK_THROWS_AS(class_to_shape(3, {2, 2, 0}), invalid_input);
  CHECK_THROWS_AS(shape_of(imm(3, {2, 0}, {{1}, {}, {1}, {1}})), invalid_input);
}

TEST_CASE("the seven immacutations of order 3") {
  std::vector<Immacutation> expected{
      imm(3, {2, 1, 0}, {{}, {}, {}, {}, {}, {}}),
      imm(3, {0}, {{1, 2}, {1, 2}}),
      imm(3, {2, 0}, {{}, {}, {1}, {1}}),
      imm(3, {1, 0}, {{1}, {1}, {}, {}}),
      imm(3, {1, 0}, {{1}, {2}, {}, {}}),
      imm(3, {1, 0}, {{2}, {1}, {}, {}}),
      imm(3, {1, 0}, {{2}, {2}, {}, {}}),
  };
  CHECK(enumerate_immacutations(3) == expected);
  CHECK(to_text(expected[2]) == "({}, {}, {1}, {1})");
}

TEST_CASE("order-4 class (3,1,0)") {
  std::vector<Immacutation> expected{
      imm(4, {3, 1, 0}, {{}, {}, {1}, {1}, {}, {}}),
      imm(4, {3, 1, 0}, {{}, {}, {1}, {2}, {}, {}}),
      imm(4, {3, 1, 0}, {{}, {}, {2}, {1}, {}, {}}),
      imm(4, {3, 1, 0}, {{}, {}, {2}, {2}, {}, {}}),
  };
  CHECK(enumerate_immacutations(4, {3, 1, 0}) == expected);
  CHECK(enumerate_immacutations(4, {3, 2, 1, 0}).size() == 1);
  CHECK_THROWS_AS(enumerate_immacutations(4, {3, 1}), invalid_input);
}

TEST_CASE("counts, validity and order") {
  auto a = a_sequence(8);
  for (int n = 1; n <= 8; ++n) {
    CAPTURE(n);
    auto list = enumerate_immacutations(n);
    CHECK(list.size() == a[static_cast<std::size_t>(n)].get_ui());
    CHECK(list.size() == brute_force_count(n));
    if (n <= 6) {
      for (std::size_t i = 0; i < list.size(); ++i) {
        CHECK(validate(list[i]));
        if (i > 0) {
          CHECK(immacutation_compare(list[i - 1], list[i])
                == std::strong_ordering::less);
        }
      }
    }
  }
  CHECK_THROWS_AS(immacutation_compare(enumerate_immacutations(2)[0],
                                       enumerate_immacutations(3)[0]),
                  invalid_input);
}

TEST_CASE("each shape contributes g squared immacutations") {
  for (int n = 1; n <= 6; ++n) {
    for (auto const& alpha : compositions_of(n)) {
      Integer g = g_count(alpha);
      CHECK(enumerate_immacutations(n, shape_to_class(alpha)).size()
            == Integer(g * g).get_ui());
    }
  }
}

TEST_CASE("k_subsets") {
  CHECK(k_subsets(3, 2) == std::vector<IntSet>{{1, 2}, {1, 3}, {2, 3}});
  CHECK(k_subsets(3, 0) == std::vector<IntSet>{{}});
  CHECK(k_subsets(0, 0) == std::vector<IntSet>{{}});
  CHECK(k_subsets(2, 3).empty());
}
