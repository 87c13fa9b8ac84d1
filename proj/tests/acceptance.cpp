// Runs every acceptance criterion with its runtime limit and prints one
// PASS/FAIL line per criterion. Exit status is nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <string>

#include "immaculate/algebra.hpp"
#include "immaculate/bijections.hpp"
#include "immaculate/counting.hpp"
#include "immaculate/immacutations.hpp"
#include "immaculate/tableaux.hpp"
#include "immaculate/young_units.hpp"

using namespace immaculate;

namespace {
  // "Instantaneous" criteria get a one-second budget.
  constexpr double instant = 1.0;

  struct Criterion {
    int                         id;
    std::string                 name;
    double                      limit_seconds;
    std::function<std::string()> body;  // empty string on success
  };

  std::string expect(bool ok, std::string const& what) {
    return ok ? "" : what;
  }

  std::string sequence_match() {
    std::vector<Integer> expected{1,    1,     2,      7,       35,      236,
                                  2037, 21695, 277966, 4198635, 73558135};
    return expect(a_sequence(10) == expected, "a(0..10) differs");
  }

  std::string dimension_identity() {
    auto a = a_sequence(8);
    for (int n = 1; n <= 8; ++n) {
      if (dim_immaculate_algebra(n) != a[static_cast<std::size_t>(n)]) {
        return "dim differs from a(n) at n = " + std::to_string(n);
      }
    }
    return "";
  }

  std::string g212() {
    auto list = enumerate_standard_immaculate({2, 1, 2});
    std::set<Tableau> expected{Tableau({{1, 4}, {2}, {3, 5}}),
                               Tableau({{1, 5}, {2}, {3, 4}}),
                               Tableau({{1, 3}, {2}, {4, 5}}),
                               Tableau({{1, 2}, {3}, {4, 5}})};
    if (g_count({2, 1, 2}) != 4 || list.size() != 4) {
      return "g^(2,1,2) != 4";
    }
    return expect(std::set<Tableau>(list.begin(), list.end()) == expected,
                  "tableau set differs");
  }

  std::string immacutation_count() {
    auto a = a_sequence(8);
    for (int n = 1; n <= 8; ++n) {
      if (Integer(static_cast<unsigned long>(enumerate_immacutations(n).size()))
          != a[static_cast<std::size_t>(n)]) {
        return "count differs from a(n) at n = " + std::to_string(n);
      }
    }
    std::vector<Immacutation> order3{
        {3, {2, 1, 0}, {{}, {}, {}, {}, {}, {}}},
        {3, {0}, {{1, 2}, {1, 2}}},
        {3, {2, 0}, {{}, {}, {1}, {1}}},
        {3, {1, 0}, {{1}, {1}, {}, {}}},
        {3, {1, 0}, {{1}, {2}, {}, {}}},
        {3, {1, 0}, {{2}, {1}, {}, {}}},
        {3, {1, 0}, {{2}, {2}, {}, {}}},
    };
    if (enumerate_immacutations(3) != order3) {
      return "order-3 list differs";
    }
    std::vector<Immacutation> slice{
        {4, {3, 1, 0}, {{}, {}, {1}, {1}, {}, {}}},
        {4, {3, 1, 0}, {{}, {}, {1}, {2}, {}, {}}},
        {4, {3, 1, 0}, {{}, {}, {2}, {1}, {}, {}}},
        {4, {3, 1, 0}, {{}, {}, {2}, {2}, {}, {}}},
    };
    return expect(enumerate_immacutations(4, {3, 1, 0}) == slice,
                  "class (3,1,0) slice differs");
  }

  std::string bijection_f() {
    for (int n = 1; n <= 6; ++n) {
      auto rep = verify_bijection_f(n);
      if (!rep.ok()) {
        return "n = " + std::to_string(n) + ": " + rep.failures.front();
      }
    }
    TableauPair  pair{Tableau({{1}, {2, 6}, {3}, {4, 5}}),
                     Tableau({{1}, {2, 4}, {3}, {5, 6}})};
    Immacutation expected{6, {5, 3, 2, 0}, {{}, {}, {4}, {2}, {}, {}, {1}, {1}}};
    if (tableaux_to_immacutation(pair) != expected) {
      return "six-cell example maps elsewhere";
    }
    return expect(immacutation_to_tableaux(expected) == pair,
                  "six-cell example does not invert");
  }

  std::string bijection_phi() {
    auto a = a_sequence(6);
    for (int n = 1; n <= 5; ++n) {
      auto rep = verify_phi(n);
      if (!rep.ok()) {
        return "n = " + std::to_string(n) + ": " + rep.failures.front();
      }
      if (Integer(static_cast<unsigned long>(rep.image))
          != a[static_cast<std::size_t>(n + 1)]) {
        return "image size differs from a(n+1) at n = " + std::to_string(n);
      }
    }
    bool ok = phi({Tableau{}, Tableau{}, {1, 2, 3}, {1, 2, 3}}, 3)
                  == TableauPair{Tableau({{1, 2, 3, 4}}), Tableau({{1, 2, 3, 4}})}
              && phi({Tableau({{1}}), Tableau({{1}}), {2, 3}, {1, 2}}, 3)
                     == TableauPair{Tableau({{1, 3, 4}, {2}}),
                                    Tableau({{1, 2, 3}, {4}})}
              && phi({Tableau({{1, 2}}), Tableau({{1, 2}}), {3}, {1}}, 3)
                     == TableauPair{Tableau({{1, 4}, {2, 3}}),
                                    Tableau({{1, 2}, {3, 4}})};
    return expect(ok, "an order-4 example differs");
  }

  std::string cayley3() {
    std::vector<std::vector<std::size_t>> expected{
        {1, 1, 1, 1, 1, 1, 1}, {1, 2, 3, 4, 5, 6, 7}, {1, 3, 3, 1, 1, 1, 1},
        {1, 4, 1, 4, 5, 1, 1}, {1, 5, 1, 1, 1, 4, 5}, {1, 6, 1, 6, 7, 1, 1},
        {1, 7, 1, 1, 1, 6, 7},
    };
    auto t          = cayley_table(3);
    int  mismatches = 0;
    for (std::size_t i = 0; i < 7; ++i) {
      for (std::size_t j = 0; j < 7; ++j) {
        if (t.table[i][j] + 1 != expected[i][j]) {
          ++mismatches;
        }
      }
    }
    return expect(mismatches == 0,
                  std::to_string(mismatches) + " of 49 cells differ");
  }

  std::string monoid() {
    for (int n = 1; n <= 5; ++n) {
      auto rep = verify_monoid(n);
      if (!rep.ok()) {
        return "n = " + std::to_string(n) + ": " + rep.failures.front();
      }
    }
    return "";
  }

  std::string h_basis() {
    for (int n = 1; n <= 4; ++n) {
      auto rep = verify_h_basis(n);
      if (!rep.ok() || rep.determinant != 1) {
        return "n = " + std::to_string(n) + ": "
               + (rep.failures.empty() ? "determinant" : rep.failures.front());
      }
    }
    return "";
  }

  std::string young() {
    for (int n = 1; n <= 4; ++n) {
      auto rep = verify_young_units(n);
      if (!rep.ok() || rep.rank != rep.units
          || rep.sum_f_squared != rep.n_factorial
          || !rep.diagonal_sum_is_identity) {
        return "n = " + std::to_string(n) + ": "
               + (rep.failures.empty() ? "report flags" : rep.failures.front());
      }
    }
    return "";
  }

  std::string embedding() {
    auto a = a_sequence(10);
    for (int n = 1; n <= 10; ++n) {
      auto rep = embedding_check(n);
      if (!rep.ok()) {
        return "n = " + std::to_string(n) + ": " + rep.failures.front();
      }
      if (factorial(static_cast<unsigned long>(n)) > a[static_cast<std::size_t>(n)]) {
        return "n! > a(n) at n = " + std::to_string(n);
      }
    }
    return "";
  }

  std::string b_factorial() {
    auto b = b_sequence(10);
    for (unsigned long n = 0; n <= 10; ++n) {
      if (b[n] != factorial(n)) {
        return "b(" + std::to_string(n) + ") != n!";
      }
    }
    return "";
  }
}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {1, "sequence a(0..10)", 1.0, sequence_match},
      {2, "dimension equals a(n), n = 1..8", 30.0, dimension_identity},
      {3, "g^(2,1,2) = 4 with its four tableaux", instant, g212},
      {4, "immacutation counts and listed examples", 30.0, immacutation_count},
      {5, "bijection f round trips, n = 1..6", 10.0, bijection_f},
      {6, "phi images and examples, n = 1..5", 10.0, bijection_phi},
      {7, "Cayley table for n = 3", instant, cayley3},
      {8, "monoid axioms, n = 1..5", 60.0, monoid},
      {9, "h/e consistency and determinant, n = 1..4", 30.0, h_basis},
      {10, "Young matrix units, n = 1..4", 60.0, young},
      {11, "embedding f <= g and n! <= a(n), n = 1..10", 10.0, embedding},
      {12, "b(n) = n!, n = 0..10", instant, b_factorial},
  };
  int failed = 0;
  for (auto const& c : criteria) {
    auto        start = std::chrono::steady_clock::now();
    std::string problem;
    try {
      problem = c.body();
    } catch (std::exception const& e) {
      problem = std::string("exception: ") + e.what();
    }
    double elapsed = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    if (problem.empty() && elapsed > c.limit_seconds) {
      problem = "over the time limit";
    }
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.3f s / %.0f s", elapsed,
                  c.limit_seconds);
    std::cout << (problem.empty() ? "PASS" : "FAIL") << " [" << c.id << "] "
              << c.name << " (" << timing << ")";
    if (!problem.empty()) {
      std::cout << ": " << problem;
      ++failed;
    }
    std::cout << "\n";
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/"
            << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
