#include <doctest.h>

#include "immaculate/algebra.hpp"
#include "immaculate/error.hpp"
#include "immaculate/exact_matrix.hpp"

using namespace immaculate;

namespace {
  using Table = std::vector<std::vector<std::size_t>>;

  // The 7 x 7 composition table for order 3, written 1-based.
  Table const order3_table{
      {1, 1, 1, 1, 1, 1, 1},
      {1, 2, 3, 4, 5, 6, 7},
      {1, 3, 3, 1, 1, 1, 1},
      {1, 4, 1, 4, 5, 1, 1},
      {1, 5, 1, 1, 1, 4, 5},
      {1, 6, 1, 6, 7, 1, 1},
      {1, 7, 1, 1, 1, 6, 7},
  };
}  // namespace

TEST_CASE("e-basis products follow the matrix unit rules") {
  AlgebraElement e11(3, {2, 0, 0});
  AlgebraElement e12(3, {2, 0, 1});
  AlgebraElement e21(3, {2, 1, 0});
  CHECK(e_multiply(e11, e11) == e11);
  CHECK(e_multiply(e12, e21) == e11);
  CHECK(e_multiply(e21, e21).is_zero());
  CHECK(e_multiply(e11, AlgebraElement(3, {0, 0, 0})).is_zero());
  CHECK_THROWS_AS(e_multiply(e11, AlgebraElement(2, {0, 0, 0})), invalid_input);

  auto sum = e11 + e12;
  sum.add_term({2, 0, 0}, -1);
  CHECK(sum == e12);
}

TEST_CASE("algebra layout") {
  ImmaculateAlgebra alg(3);
  CHECK(alg.dimension() == 7);
  CHECK(alg.shapes() == std::vector<Composition>{{1, 1, 1}, {3}, {1, 2}, {2, 1}});
  CHECK(alg.identity() == HBasisElement{3, 1, 0, 0});
  CHECK(alg.quasi_identity() == HBasisElement{3, 0, 0, 0});
  auto basis = alg.h_basis();
  for (std::size_t p = 0; p < basis.size(); ++p) {
    CHECK(alg.position(basis[p]) == p);
    CHECK(alg.h_of_pair(alg.pair_of(basis[p])) == basis[p]);
  }
  CHECK(ImmaculateAlgebra(1).identity() == ImmaculateAlgebra(1).quasi_identity());
}

TEST_CASE("closed-form products on special elements") {
  for (int n = 3; n <= 5; ++n) {
    ImmaculateAlgebra alg(n);
    auto const        qid = alg.quasi_identity();
    auto const        id  = alg.identity();
    for (auto const& h : alg.h_basis()) {
      CHECK(h_multiply(qid, h) == qid);
      CHECK(h_multiply(h, qid) == qid);
      CHECK(h_multiply(id, h) == h);
      CHECK(h_multiply(h, id) == h);
    }
  }
  CHECK_THROWS_AS(h_multiply({2, 0, 0, 0}, {3, 0, 0, 0}), invalid_input);
}

TEST_CASE("Cayley table for order 3") {
  auto const t = cayley_table(3);
  REQUIRE(t.table.size() == 7);
  for (std::size_t i = 0; i < 7; ++i) {
    for (std::size_t j = 0; j < 7; ++j) {
      CAPTURE(i);
      CAPTURE(j);
      CHECK(t.table[i][j] + 1 == order3_table[i][j]);
    }
  }
  CHECK(t.elements == enumerate_immacutations(3));
}

TEST_CASE("Cayley tables for orders 1 and 2") {
  CHECK(cayley_table(1).table == Table{{0}});
  CHECK(cayley_table(2).table == Table{{0, 0}, {0, 1}});
}

TEST_CASE("h basis is unitriangular over the e basis") {
  for (int n = 1; n <= 4; ++n) {
    auto rep = verify_h_basis(n);
    CAPTURE(n);
    CHECK(rep.ok());
    CHECK(rep.determinant == 1);
    CHECK(rep.products_checked == rep.dimension * rep.dimension);
  }
}

TEST_CASE("monoid axioms") {
  for (int n = 1; n <= 5; ++n) {
    auto rep = verify_monoid(n);
    CAPTURE(n);
    CHECK(rep.ok());
    CHECK(rep.triples_checked == rep.size * rep.size * rep.size);
  }
}

TEST_CASE("corrupted products are caught") {
  // Drops the absorbing rule for the quasi-identity on the left.
  HProduct no_absorb = [](HBasisElement const& x, HBasisElement const& y) {
    if (is_vertical_shape(x) && !is_horizontal_shape(y)) {
      return y;
    }
    return h_multiply(x, y);
  };
  CHECK_FALSE(verify_h_basis(3, no_absorb).ok());
  CHECK_FALSE(verify_monoid(3, no_absorb).ok());

  // Multiplies matching units the wrong way round.
  HProduct transposed = [](HBasisElement const& x, HBasisElement const& y) {
    auto r = h_multiply(x, y);
    if (!is_vertical_shape(x) && !is_horizontal_shape(x)
        && !is_vertical_shape(y) && !is_horizontal_shape(y)) {
      std::swap(r.row, r.col);
    }
    return r;
  };
  CHECK_FALSE(verify_h_basis(3, transposed).ok());
  CHECK_FALSE(verify_monoid(3, transposed).ok());

  // Ignores the inner index match.
  HProduct sloppy = [](HBasisElement const& x, HBasisElement const& y) {
    if (x.shape == y.shape && !is_vertical_shape(x) && !is_horizontal_shape(x)) {
      return HBasisElement{x.n, x.shape, x.row, y.col};
    }
    return h_multiply(x, y);
  };
  CHECK_FALSE(verify_h_basis(3, sloppy).ok());

  Table broken = order3_table;
  for (auto& row : broken) {
    for (auto& v : row) {
      --v;
    }
  }
  CHECK(check_monoid_table(broken, 1).ok());
  broken[4][5] = 4;
  CHECK_FALSE(check_monoid_table(broken, 1).ok());
  CHECK_FALSE(check_monoid_table(broken, 0).ok());
}

TEST_CASE("exact matrices") {
  RationalMatrix m{{2, 1}, {4, 3}};
  CHECK(determinant(m) == 2);
  CHECK(rank(m) == 2);
  CHECK(rank({{1, 2}, {2, 4}}) == 1);
  CHECK(determinant({{Rational(1, 2), 0}, {0, 4}}) == 2);
}
