#include <doctest.h>

#include <set>

#include "immaculate/compositions.hpp"
#include "immaculate/error.hpp"

using namespace immaculate;

TEST_CASE("composition validation") {
  CHECK(Composition{2, 1, 2}.size() == 5);
  CHECK(Composition{2, 1, 2}.length() == 3);
  CHECK(Composition{}.size() == 0);
  CHECK_THROWS_AS(Composition({2, 0, 1}), invalid_input);
  CHECK_THROWS_AS(Composition({-1}), invalid_input);
  CHECK_THROWS_AS(Partition({1, 2}), invalid_input);
  CHECK(Partition{3, 1, 1}.size() == 5);
}

TEST_CASE("compositions_of") {
  CHECK(compositions_of(0) == std::vector<Composition>{Composition{}});
  CHECK(compositions_of(3)
        == std::vector<Composition>{{1, 1, 1}, {1, 2}, {2, 1}, {3}});
  for (int n = 1; n <= 10; ++n) {
    auto list = compositions_of(n);
    CHECK(list.size() == (std::size_t{1} << (n - 1)));
    CHECK(std::set<Composition>(list.begin(), list.end()).size() == list.size());
    CHECK(std::is_sorted(list.begin(), list.end()));
    for (auto const& c : list) {
      CHECK(c.size() == n);
    }
  }
}

TEST_CASE("partitions_of") {
  CHECK(partitions_of(4)
        == std::vector<Partition>{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}});
  std::vector<std::size_t> counts;
  for (int n = 1; n <= 10; ++n) {
    counts.push_back(partitions_of(n).size());
  }
  CHECK(counts == std::vector<std::size_t>{1, 2, 3, 5, 7, 11, 15, 22, 30, 42});
}

TEST_CASE("lex and triangle orders") {
  CHECK(lex_compare({1, 2}, {2, 1}) == std::strong_ordering::less);
  CHECK(lex_compare({2, 1}, {2, 1}) == std::strong_ordering::equal);
  CHECK(lex_compare({2}, {2, 1}) == std::strong_ordering::less);

  CHECK(triangle_compare({1, 1, 1}, {3}) == std::strong_ordering::less);
  CHECK(triangle_compare({3}, {1, 2}) == std::strong_ordering::less);
  CHECK(triangle_compare({1, 2}, {2, 1}) == std::strong_ordering::less);
  CHECK(triangle_compare({3}, {1, 1, 1}) == std::strong_ordering::greater);
  CHECK(triangle_compare({1}, {1}) == std::strong_ordering::equal);
  CHECK_THROWS_AS(triangle_compare({1, 2}, {2}), invalid_input);

  CHECK(compositions_in_triangle_order(3)
        == std::vector<Composition>{{1, 1, 1}, {3}, {1, 2}, {2, 1}});
  CHECK(compositions_in_triangle_order(1) == std::vector<Composition>{{1}});
  for (int n = 1; n <= 7; ++n) {
    auto list = compositions_in_triangle_order(n);
    CHECK(list.size() == compositions_of(n).size());
    for (std::size_t i = 1; i < list.size(); ++i) {
      CHECK(triangle_compare(list[i - 1], list[i]) == std::strong_ordering::less);
    }
  }
}

TEST_CASE("vertical and horizontal") {
  CHECK(is_vertical({1, 1, 1}));
  CHECK(is_horizontal({3}));
  CHECK_FALSE(is_vertical({2, 1}));
  CHECK_FALSE(is_horizontal({2, 1}));
  CHECK(is_vertical({1}));
  CHECK(is_horizontal({1}));
  CHECK(Composition::vertical(4) == Composition{1, 1, 1, 1});
  CHECK(Composition::horizontal(4) == Composition{4});
}

TEST_CASE("parsing and printing") {
  CHECK(parse_composition("2,1,2") == Composition{2, 1, 2});
  CHECK(parse_composition(" 3 ") == Composition{3});
  CHECK(parse_composition("") == Composition{});
  CHECK(to_string(Composition{2, 1, 2}) == "(2,1,2)");
  for (auto bad : {"2,,1", "a", "2,0", "-1", "1.5", "2,1,"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_composition(bad), invalid_input);
  }
}
