#include "immaculate/algebra.hpp"

#include <algorithm>
#include <sstream>

#include "immaculate/error.hpp"
#include "immaculate/exact_matrix.hpp"

namespace immaculate {

  namespace {
    constexpr std::size_t max_reported_failures = 20;

    void report(std::vector<std::string>& failures, std::string message) {
      if (failures.size() < max_reported_failures) {
        failures.push_back(std::move(message));
      }
    }

    std::string describe(HBasisElement const& h) {
      std::ostringstream os;
      os << "h[shape " << h.shape << "](" << h.row << "," << h.col << ")";
      return os.str();
    }

    std::size_t horizontal_position(int n) {
      return n == 1 ? 0 : 1;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // AlgebraElement
  ////////////////////////////////////////////////////////////////////////

  AlgebraElement::AlgebraElement(int n, EBasisIndex unit) : n_(n) {
    terms_.emplace(unit, Rational(1));
  }

  Rational AlgebraElement::coefficient(EBasisIndex const& unit) const {
    auto it = terms_.find(unit);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void AlgebraElement::add_term(EBasisIndex const& unit, Rational const& c) {
    if (c == 0) {
      return;
    }
    auto [it, inserted] = terms_.try_emplace(unit, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) {
        terms_.erase(it);
      }
    }
  }

  AlgebraElement& AlgebraElement::operator+=(AlgebraElement const& other) {
    if (other.n_ != n_) {
      throw invalid_input("cannot add elements of different orders");
    }
    for (auto const& [unit, c] : other.terms_) {
      add_term(unit, c);
    }
    return *this;
  }

  AlgebraElement e_multiply(AlgebraElement const& x, AlgebraElement const& y) {
    if (x.n() != y.n()) {
      throw invalid_input("e_multiply: elements of orders "
                          + std::to_string(x.n()) + " and "
                          + std::to_string(y.n()));
    }
    AlgebraElement result(x.n());
    for (auto const& [a, ca] : x.terms()) {
      for (auto const& [b, cb] : y.terms()) {
        if (a.shape == b.shape && a.col == b.row) {
          result.add_term({a.shape, a.row, b.col}, ca * cb);
        }
      }
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // h-basis closed form
  ////////////////////////////////////////////////////////////////////////

  bool is_vertical_shape(HBasisElement const& h) {
    return h.shape == 0;
  }

  bool is_horizontal_shape(HBasisElement const& h) {
    return h.shape == horizontal_position(h.n);
  }

  HBasisElement h_multiply(HBasisElement const& x, HBasisElement const& y) {
    if (x.n != y.n) {
      throw invalid_input("h_multiply: elements of orders "
                          + std::to_string(x.n) + " and "
                          + std::to_string(y.n));
    }
    if (is_horizontal_shape(x)) {
      return y;
    }
    if (is_horizontal_shape(y)) {
      return x;
    }
    if (x.shape == y.shape && x.col == y.row) {
      return {x.n, x.shape, x.row, y.col};
    }
    return {x.n, 0, 0, 0};
  }

  ////////////////////////////////////////////////////////////////////////
  // ImmaculateAlgebra
  ////////////////////////////////////////////////////////////////////////

  ImmaculateAlgebra::ImmaculateAlgebra(int n)
      : n_(n), shapes_(compositions_in_triangle_order(n)) {
    if (n < 1) {
      throw invalid_input("immaculate algebra order must be positive");
    }
    for (auto const& shape : shapes_) {
      tableaux_.push_back(enumerate_standard_immaculate(shape));
      offsets_.push_back(dimension_);
      dimension_ += tableaux_.back().size() * tableaux_.back().size();
    }
  }

  std::size_t ImmaculateAlgebra::shape_index(Composition const& shape) const {
    auto it = std::find(shapes_.begin(), shapes_.end(), shape);
    if (it == shapes_.end()) {
      throw invalid_input("shape " + to_string(shape)
                          + " is not a composition of "
                          + std::to_string(n_));
    }
    return static_cast<std::size_t>(it - shapes_.begin());
  }

  std::size_t ImmaculateAlgebra::tableau_index(std::size_t    shape,
                                               Tableau const& t) const {
    auto const& list = tableaux_.at(shape);
    auto        it   = std::lower_bound(list.begin(), list.end(), t);
    if (it == list.end() || *it != t) {
      throw invalid_input("not a standard immaculate tableau of shape "
                          + to_string(shapes_[shape]) + ": " + to_text(t));
    }
    return static_cast<std::size_t>(it - list.begin());
  }

  bool ImmaculateAlgebra::contains(EBasisIndex const& unit) const {
    if (unit.shape >= shapes_.size()) {
      return false;
    }
    auto g = tableaux_[unit.shape].size();
    return unit.row < g && unit.col < g;
  }

  bool ImmaculateAlgebra::contains(HBasisElement const& h) const {
    return h.n == n_ && contains(EBasisIndex{h.shape, h.row, h.col});
  }

  std::size_t ImmaculateAlgebra::position(EBasisIndex const& unit) const {
    if (!contains(unit)) {
      throw invalid_input("matrix unit outside the algebra");
    }
    auto g = tableaux_[unit.shape].size();
    return offsets_[unit.shape] + unit.row * g + unit.col;
  }

  std::size_t ImmaculateAlgebra::position(HBasisElement const& h) const {
    if (h.n != n_) {
      throw invalid_input("h element of a different order");
    }
    return position(EBasisIndex{h.shape, h.row, h.col});
  }

  EBasisIndex ImmaculateAlgebra::unit_at(std::size_t pos) const {
    if (pos >= dimension_) {
      throw invalid_input("basis position out of range");
    }
    auto it    = std::upper_bound(offsets_.begin(), offsets_.end(), pos);
    auto shape = static_cast<std::size_t>(it - offsets_.begin()) - 1;
    auto local = pos - offsets_[shape];
    auto g     = tableaux_[shape].size();
    return {shape, local / g, local % g};
  }

  std::vector<HBasisElement> ImmaculateAlgebra::h_basis() const {
    std::vector<HBasisElement> out;
    out.reserve(dimension_);
    for (std::size_t p = 0; p < dimension_; ++p) {
      auto u = unit_at(p);
      out.push_back({n_, u.shape, u.row, u.col});
    }
    return out;
  }

  HBasisElement ImmaculateAlgebra::identity() const {
    return {n_, horizontal_position(n_), 0, 0};
  }

  HBasisElement ImmaculateAlgebra::quasi_identity() const {
    return {n_, 0, 0, 0};
  }

  HBasisElement ImmaculateAlgebra::h_of_pair(TableauPair const& pair) const {
    auto s = shape_index(pair.shape());
    return {n_, s, tableau_index(s, pair.first), tableau_index(s, pair.second)};
  }

  TableauPair ImmaculateAlgebra::pair_of(HBasisElement const& h) const {
    if (!contains(h)) {
      throw invalid_input("h element outside the algebra");
    }
    return {tableaux_[h.shape][h.row], tableaux_[h.shape][h.col]};
  }

  AlgebraElement ImmaculateAlgebra::h_expand(HBasisElement const& h) const {
    if (!contains(h)) {
      throw invalid_input("h element outside the algebra");
    }
    AlgebraElement result(n_);
    if (is_vertical_shape(h)) {
      // Also covers n = 1, where the sum of diagonal units is this unit.
      result.add_term({0, 0, 0}, 1);
    } else if (is_horizontal_shape(h)) {
      for (std::size_t s = 0; s < shapes_.size(); ++s) {
        for (std::size_t t = 0; t < tableaux_[s].size(); ++t) {
          result.add_term({s, t, t}, 1);
        }
      }
    } else {
      result.add_term({0, 0, 0}, 1);
      result.add_term({h.shape, h.row, h.col}, 1);
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Verification
  ////////////////////////////////////////////////////////////////////////

  std::vector<std::vector<Rational>>
  transition_matrix(ImmaculateAlgebra const& algebra) {
    auto const dim = algebra.dimension();
    std::vector<std::vector<Rational>> m(dim, std::vector<Rational>(dim));
    auto basis = algebra.h_basis();
    for (std::size_t p = 0; p < dim; ++p) {
      auto const expanded = algebra.h_expand(basis[p]);
      for (auto const& [unit, c] : expanded.terms()) {
        m[p][algebra.position(unit)] = c;
      }
    }
    return m;
  }

  HBasisReport verify_h_basis(int n, HProduct const& product) {
    ImmaculateAlgebra algebra(n);
    HBasisReport      rep;
    rep.n           = n;
    rep.dimension   = algebra.dimension();
    rep.determinant = determinant(transition_matrix(algebra));
    if (rep.determinant != 1) {
      report(rep.failures,
             "transition matrix determinant is "
                 + rational_string(rep.determinant));
    }
    auto basis = algebra.h_basis();
    std::vector<AlgebraElement> expanded;
    expanded.reserve(basis.size());
    for (auto const& h : basis) {
      expanded.push_back(algebra.h_expand(h));
    }
    for (std::size_t i = 0; i < basis.size(); ++i) {
      for (std::size_t j = 0; j < basis.size(); ++j) {
        ++rep.products_checked;
        auto closed = product(basis[i], basis[j]);
        if (!algebra.contains(closed)) {
          report(rep.failures,
                 describe(basis[i]) + " * " + describe(basis[j])
                     + " leaves the basis");
          continue;
        }
        if (expanded[algebra.position(closed)]
            != e_multiply(expanded[i], expanded[j])) {
          report(rep.failures,
                 describe(basis[i]) + " * " + describe(basis[j]) + " = "
                     + describe(closed)
                     + " disagrees with the matrix-unit product");
        }
      }
    }
    return rep;
  }

  namespace {
    // Product table over h positions; empty on a closure failure.
    std::vector<std::vector<std::size_t>>
    position_table(ImmaculateAlgebra const& algebra,
                   HProduct const&          product,
                   std::vector<std::string>& failures) {
      auto basis = algebra.h_basis();
      std::vector<std::vector<std::size_t>> table(
          basis.size(), std::vector<std::size_t>(basis.size()));
      bool closed = true;
      for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = 0; j < basis.size(); ++j) {
          auto h = product(basis[i], basis[j]);
          if (!algebra.contains(h)) {
            report(failures,
                   describe(basis[i]) + " * " + describe(basis[j])
                       + " leaves the basis");
            closed = false;
            continue;
          }
          table[i][j] = algebra.position(h);
        }
      }
      if (!closed) {
        table.clear();
      }
      return table;
    }
  }  // namespace

  CayleyTable cayley_table(int n, HProduct const& product) {
    ImmaculateAlgebra        algebra(n);
    std::vector<std::string> failures;
    auto ptable = position_table(algebra, product, failures);
    if (ptable.empty()) {
      throw invalid_input("cayley_table: product is not closed: "
                          + failures.front());
    }
    CayleyTable result;
    result.n        = n;
    result.elements = enumerate_immacutations(n);
    auto const size = result.elements.size();
    std::vector<std::size_t> position_of(size), element_at(size);
    for (std::size_t i = 0; i < size; ++i) {
      auto p = algebra.position(
          algebra.h_of_pair(immacutation_to_tableaux(result.elements[i])));
      position_of[i] = p;
      element_at[p]  = i;
    }
    result.table.assign(size, std::vector<std::size_t>(size));
    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t j = 0; j < size; ++j) {
        result.table[i][j] = element_at[ptable[position_of[i]][position_of[j]]];
      }
    }
    return result;
  }

  MonoidReport
  check_monoid_table(std::vector<std::vector<std::size_t>> const& table,
                     std::size_t                                  identity) {
    MonoidReport rep;
    rep.size     = table.size();
    rep.identity = identity;
    auto const m = table.size();
    for (auto const& row : table) {
      if (row.size() != m) {
        report(rep.failures, "table is not square");
        return rep;
      }
      for (auto v : row) {
        if (v >= m) {
          report(rep.failures, "table entry outside the element set");
          return rep;
        }
      }
    }
    if (identity >= m) {
      report(rep.failures, "identity index out of range");
      return rep;
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (table[identity][i] != i || table[i][identity] != i) {
        report(rep.failures,
               "identity fails on element t" + std::to_string(i + 1));
      }
    }
    for (std::size_t a = 0; a < m; ++a) {
      auto const& row_a = table[a];
      for (std::size_t b = 0; b < m; ++b) {
        auto const  ab    = row_a[b];
        auto const& row_b = table[b];
        auto const& row_ab = table[ab];
        for (std::size_t c = 0; c < m; ++c) {
          if (row_ab[c] != row_a[row_b[c]]) {
            report(rep.failures,
                   "(t" + std::to_string(a + 1) + " t" + std::to_string(b + 1)
                       + ") t" + std::to_string(c + 1) + " != t"
                       + std::to_string(a + 1) + " (t" + std::to_string(b + 1)
                       + " t" + std::to_string(c + 1) + ")");
          }
        }
      }
    }
    rep.triples_checked = m * m * m;
    return rep;
  }

  MonoidReport verify_monoid(int n, HProduct const& product) {
    ImmaculateAlgebra        algebra(n);
    std::vector<std::string> failures;
    auto ptable = position_table(algebra, product, failures);
    if (ptable.empty()) {
      MonoidReport rep;
      rep.n        = n;
      rep.size     = algebra.dimension();
      rep.failures = std::move(failures);
      return rep;
    }
    auto table = cayley_table(n, product);
    // Locate the element carrying h^{(n)}.
    std::size_t identity = table.elements.size();
    auto        id       = algebra.identity();
    for (std::size_t i = 0; i < table.elements.size(); ++i) {
      if (algebra.h_of_pair(immacutation_to_tableaux(table.elements[i]))
          == id) {
        identity = i;
        break;
      }
    }
    auto rep = check_monoid_table(table.table, identity);
    rep.n    = n;
    return rep;
  }

}  // namespace immaculate
