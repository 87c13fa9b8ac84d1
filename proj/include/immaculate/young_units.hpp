#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "immaculate/compositions.hpp"
#include "immaculate/numbers.hpp"
#include "immaculate/tableaux.hpp"

namespace immaculate {

  //! A bijection of {1..n} in one-line notation.
  class Permutation {
   public:
    Permutation() = default;
    //! Throws invalid_input unless images is a permutation of 1..n.
    explicit Permutation(std::vector<int> images);
    Permutation(std::initializer_list<int> images)
        : Permutation(std::vector<int>(images)) {}

    static Permutation identity(int n);
    //! The transposition exchanging a and b in S_n.
    static Permutation transposition(int n, int a, int b);

    int size() const noexcept { return static_cast<int>(images_.size()); }
    std::vector<int> const& images() const noexcept { return images_; }
    int operator()(int x) const { return images_[static_cast<std::size_t>(x - 1)]; }

    Permutation inverse() const;
    int         sign() const;
    bool        is_identity() const;

    bool operator==(Permutation const&) const = default;
    auto operator<=>(Permutation const&) const = default;

   private:
    std::vector<int> images_;
  };

  //! (p o q)(x) = p(q(x)). Throws invalid_input for different n.
  Permutation compose(Permutation const& p, Permutation const& q);

  //! All of S_n in lexicographic order of one-line notation.
  std::vector<Permutation> all_permutations(int n);

  //! Exact rational combination of permutations of one fixed n.
  class GroupAlgebraElement {
   public:
    using Terms = std::map<Permutation, Rational>;

    explicit GroupAlgebraElement(int n) : n_(n) {}
    GroupAlgebraElement(Permutation const& p, Rational c = 1);

    static GroupAlgebraElement identity(int n);

    int          n() const noexcept { return n_; }
    Terms const& terms() const noexcept { return terms_; }
    bool         is_zero() const noexcept { return terms_.empty(); }
    Rational     coefficient(Permutation const& p) const;

    void add_term(Permutation const& p, Rational const& c);

    GroupAlgebraElement& operator+=(GroupAlgebraElement const& other);
    GroupAlgebraElement& operator-=(GroupAlgebraElement const& other);
    GroupAlgebraElement& operator*=(Rational const& c);

    friend GroupAlgebraElement operator+(GroupAlgebraElement x,
                                         GroupAlgebraElement const& y) {
      return x += y;
    }
    friend GroupAlgebraElement operator-(GroupAlgebraElement x,
                                         GroupAlgebraElement const& y) {
      return x -= y;
    }
    friend GroupAlgebraElement operator*(Rational const& c,
                                         GroupAlgebraElement x) {
      return x *= c;
    }

    bool operator==(GroupAlgebraElement const&) const = default;

   private:
    int   n_;
    Terms terms_;
  };

  //! Convolution product. Throws invalid_input for different n.
  GroupAlgebraElement operator*(GroupAlgebraElement const& x,
                                GroupAlgebraElement const& y);

  //! A partition-shaped tableau whose labels are exactly 1..n.
  class InjectiveTableau {
   public:
    //! Throws invalid_input for a non-partition shape or a non-bijective
    //! labelling.
    explicit InjectiveTableau(Tableau t);

    Tableau const& tableau() const noexcept { return tableau_; }
    Partition      shape() const { return Partition(tableau_.shape().parts()); }
    int            size() const noexcept { return tableau_.num_cells(); }
    //! Label sets of the columns, left to right.
    std::vector<std::vector<int>> columns() const;

    bool operator==(InjectiveTableau const&) const = default;

   private:
    Tableau tableau_;
  };

  //! Replaces every label v with p(v).
  InjectiveTableau act(Permutation const& p, InjectiveTableau const& t);

  //! Permutations preserving the label set of each row (resp. column),
  //! sorted.
  std::vector<Permutation> row_group(InjectiveTableau const& t);
  std::vector<Permutation> column_group(InjectiveTableau const& t);

  //! Sum of the row group.
  GroupAlgebraElement P_element(InjectiveTableau const& t);
  //! Signed sum of the column group.
  GroupAlgebraElement N_element(InjectiveTableau const& t);

  //! Young's first letter order: scan labels 1, 2, ...; at the first label
  //! placed in different cells, the tableau holding it in the larger row index
  //! comes first (lower in English notation). For standard tableaux the rows
  //! always differ there.
  std::vector<Tableau> yflo_sort(std::vector<Tableau> tableaux);

  //! The permutation s with act(s, t2) = t1. Throws on a shape mismatch.
  Permutation sigma(InjectiveTableau const& t1, InjectiveTableau const& t2);

  //! Young's matrix units for one shape, built once.
  class YoungUnits {
   public:
    explicit YoungUnits(Partition shape);
    //! Uses the given order of the standard Young tableaux instead.
    YoungUnits(Partition shape, std::vector<Tableau> order);

    Partition const&            shape() const noexcept { return shape_; }
    std::vector<Tableau> const& tableaux() const noexcept { return tableaux_; }
    std::size_t dim() const noexcept { return tableaux_.size(); }

    //! (f / n!) N(S_i) P(S_i), 1-based.
    GroupAlgebraElement const& gamma(std::size_t i) const;
    //! sigma_{i,j} gamma_j (1 - gamma_{j+1}) ... (1 - gamma_f), 1-based.
    GroupAlgebraElement const& unit(std::size_t i, std::size_t j) const;

   private:
    Partition                        shape_;
    std::vector<Tableau>             tableaux_;
    std::vector<GroupAlgebraElement> gammas_;
    std::vector<GroupAlgebraElement> units_;  // row-major, f x f
  };

  GroupAlgebraElement gamma(Partition const& shape, std::size_t i);
  GroupAlgebraElement young_unit(Partition const& shape,
                                 std::size_t      i,
                                 std::size_t      j);

  struct YoungReport {
    int                      n = 0;
    std::size_t              units = 0;
    std::size_t              products_checked = 0;
    std::size_t              rank = 0;
    Integer                  sum_f_squared;
    Integer                  n_factorial;
    bool                     diagonal_sum_is_identity = false;
    std::vector<std::string> failures;

    bool ok() const noexcept { return failures.empty(); }
  };

  //! Matrix-unit multiplication rules for every pair of units over all
  //! shapes, linear independence, sum of (f^lambda)^2 = n!, and that the
  //! diagonal units sum to the identity.
  YoungReport verify_young_units(int n);

  struct EmbeddingReport {
    struct Row {
      Partition shape;
      Integer   f;
      Integer   g;
    };

    int                      n = 0;
    std::vector<Row>         rows;
    Integer                  sum_f_squared;
    Integer                  sum_g_squared;
    std::vector<std::string> failures;

    bool ok() const noexcept { return failures.empty(); }
  };

  //! f^lambda <= g^lambda for every partition of n (every standard Young
  //! tableau is standard immaculate), and n! = sum f^2 <= sum g^2 = a(n).
  EmbeddingReport embedding_check(int n);

}  // namespace immaculate
