#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "immaculate/bijections.hpp"
#include "immaculate/compositions.hpp"
#include "immaculate/immacutations.hpp"
#include "immaculate/numbers.hpp"
#include "immaculate/tableaux.hpp"

namespace immaculate {

  // Throughout this header a shape is identified by its position in
  // compositions_in_triangle_order(n): position 0 is (1^n) and position 1 is
  // (n) when n >= 2 (for n = 1 both are position 0). Tableaux are identified
  // by their position in enumerate_standard_immaculate(shape).

  //! Matrix unit e^shape_{row, col}.
  struct EBasisIndex {
    std::size_t shape = 0;
    std::size_t row   = 0;
    std::size_t col   = 0;

    auto operator<=>(EBasisIndex const&) const = default;
  };

  //! Exact rational combination of matrix units of one order n.
  class AlgebraElement {
   public:
    using Terms = std::map<EBasisIndex, Rational>;

    explicit AlgebraElement(int n) : n_(n) {}
    AlgebraElement(int n, EBasisIndex unit);

    int          n() const noexcept { return n_; }
    Terms const& terms() const noexcept { return terms_; }
    bool         is_zero() const noexcept { return terms_.empty(); }
    Rational     coefficient(EBasisIndex const& unit) const;

    //! Adds c * unit, dropping the term if it cancels.
    void add_term(EBasisIndex const& unit, Rational const& c);

    AlgebraElement& operator+=(AlgebraElement const& other);
    friend AlgebraElement operator+(AlgebraElement x, AlgebraElement const& y) {
      return x += y;
    }

    bool operator==(AlgebraElement const&) const = default;

   private:
    int   n_;
    Terms terms_;
  };

  //! Bilinear extension of e^a_{i,j} e^b_{k,l} = [a = b][j = k] e^a_{i,l}.
  //! Throws invalid_input when the orders differ.
  AlgebraElement e_multiply(AlgebraElement const& x, AlgebraElement const& y);

  //! Basis element h^shape_{row, col}.
  struct HBasisElement {
    int         n     = 0;
    std::size_t shape = 0;
    std::size_t row   = 0;
    std::size_t col   = 0;

    auto operator<=>(HBasisElement const&) const = default;
  };

  bool is_vertical_shape(HBasisElement const& h);
  bool is_horizontal_shape(HBasisElement const& h);

  //! Closed-form monoid product of two h-basis elements.
  //!
  //! id = h^{(n)} is a two-sided identity; otherwise equal shapes with
  //! matching inner tableaux give h^shape_{x.row, y.col} and everything else
  //! collapses to qid = h^{(1^n)}. Throws invalid_input for mixed orders.
  HBasisElement h_multiply(HBasisElement const& x, HBasisElement const& y);

  using HProduct = std::function<HBasisElement(HBasisElement const&,
                                               HBasisElement const&)>;

  //! Shapes, tableaux and basis positions of the immaculate algebra of
  //! order n.
  class ImmaculateAlgebra {
   public:
    explicit ImmaculateAlgebra(int n);

    int n() const noexcept { return n_; }
    std::vector<Composition> const& shapes() const noexcept { return shapes_; }
    std::vector<Tableau> const& tableaux(std::size_t shape) const {
      return tableaux_.at(shape);
    }
    std::size_t shape_index(Composition const& shape) const;
    std::size_t tableau_index(std::size_t shape, Tableau const& t) const;

    //! Number of matrix units.
    std::size_t dimension() const noexcept { return dimension_; }
    //! Position of a unit (or h element) in shape/row/col order.
    std::size_t position(EBasisIndex const& unit) const;
    std::size_t position(HBasisElement const& h) const;
    EBasisIndex unit_at(std::size_t position) const;
    bool        contains(EBasisIndex const& unit) const;
    bool        contains(HBasisElement const& h) const;

    //! All h-basis elements in position order.
    std::vector<HBasisElement> h_basis() const;
    HBasisElement              identity() const;
    HBasisElement              quasi_identity() const;

    HBasisElement h_of_pair(TableauPair const& pair) const;
    TableauPair   pair_of(HBasisElement const& h) const;

    //! Expansion of h into matrix units.
    AlgebraElement h_expand(HBasisElement const& h) const;

   private:
    int                               n_;
    std::vector<Composition>          shapes_;
    std::vector<std::vector<Tableau>> tableaux_;
    std::vector<std::size_t>          offsets_;
    std::size_t                       dimension_ = 0;
  };

  struct HBasisReport {
    int                      n = 0;
    std::size_t              dimension = 0;
    Rational                 determinant;
    std::size_t              products_checked = 0;
    std::vector<std::string> failures;

    bool ok() const noexcept { return failures.empty(); }
  };

  //! Transition matrix from h to e has determinant 1, and the given product
  //! agrees with multiplying the e-expansions for every pair.
  HBasisReport verify_h_basis(int n, HProduct const& product = h_multiply);

  //! Matrix whose row p holds the e-coefficients of the p-th h element.
  std::vector<std::vector<Rational>>
  transition_matrix(ImmaculateAlgebra const& algebra);

  //! Monoid composition table over the order-n immacutations.
  //!
  //! table[i][j] is the index of the product of elements[i] and elements[j],
  //! computed on the h elements matched to them by the tableau bijection.
  struct CayleyTable {
    int                                   n = 0;
    std::vector<Immacutation>             elements;
    std::vector<std::vector<std::size_t>> table;
  };

  CayleyTable cayley_table(int n, HProduct const& product = h_multiply);

  struct MonoidReport {
    int                      n = 0;
    std::size_t              size = 0;
    std::size_t              identity = 0;
    std::size_t              triples_checked = 0;
    std::vector<std::string> failures;

    bool ok() const noexcept { return failures.empty(); }
  };

  //! Closure, associativity over all triples, and two-sided identity h^{(n)}.
  MonoidReport verify_monoid(int n, HProduct const& product = h_multiply);

  //! Associativity and identity checks on a finished table. Closure is taken
  //! as given: every entry must be a valid index.
  MonoidReport check_monoid_table(
      std::vector<std::vector<std::size_t>> const& table,
      std::size_t                                  identity);

}  // namespace immaculate
