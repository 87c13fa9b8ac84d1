#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <initializer_list>
#include <vector>

#include "immaculate/compositions.hpp"
#include "immaculate/numbers.hpp"

namespace immaculate {

  //! A filling of a composition diagram by positive integers.
  //!
  //! Rows are stored in French notation: rows()[0] is the bottom row, and each
  //! row is read left to right. The default tableau is the empty tableau of
  //! shape ().
  class Tableau {
   public:
    using Row = std::vector<int>;

    Tableau() = default;
    //! Shape is read off the row lengths; every row must be nonempty.
    explicit Tableau(std::vector<Row> rows);
    Tableau(std::initializer_list<Row> rows)
        : Tableau(std::vector<Row>(rows)) {}
    //! Throws invalid_input unless row lengths match the shape.
    Tableau(Composition shape, std::vector<Row> rows);

    Composition const&      shape() const noexcept { return shape_; }
    std::vector<Row> const& rows() const noexcept { return rows_; }
    Row const&              row(std::size_t i) const { return rows_[i]; }
    std::size_t             num_rows() const noexcept { return rows_.size(); }
    int  num_cells() const noexcept { return shape_.size(); }
    bool empty() const noexcept { return rows_.empty(); }

    //! Bottom-up, left-right concatenation of the rows.
    std::vector<int> reading_word() const;

    bool operator==(Tableau const&) const = default;
    // For tableaux of equal shape this is the reading-word order.
    std::strong_ordering operator<=>(Tableau const& other) const;

   private:
    Composition      shape_;
    std::vector<Row> rows_;
  };

  //! Shape/content/row/first-column axioms of an immaculate tableau.
  bool is_immaculate(Tableau const& t, Composition const& content);
  //! is_immaculate with content (1^n).
  bool is_standard_immaculate(Tableau const& t);
  //! Partition shape, labels 1..n, rows and columns strictly increasing.
  bool is_standard_young(Tableau const& t);

  //! All standard immaculate tableaux of the given shape, in reading-word
  //! order. The empty shape yields the single empty tableau.
  std::vector<Tableau> enumerate_standard_immaculate(Composition const& shape);

  //! All immaculate tableaux of the given shape and content, in reading-word
  //! order; empty when the sizes differ.
  std::vector<Tableau> enumerate_immaculate(Composition const& shape,
                                            Composition const& content);

  //! Number of standard immaculate tableaux of the shape (memoized, safe to
  //! call from several threads).
  Integer g_count(Composition const& shape);

  Integer kostka_count(Composition const& shape, Composition const& content);

  std::vector<Tableau> enumerate_standard_young(Partition const& shape);
  Integer              f_count(Partition const& shape);

  //! Rows bottom-up separated by " / ", e.g. "1 4 / 2 / 3 5"; the empty
  //! tableau prints as "()".
  std::string to_text(Tableau const& t);

  //! Replaces the j-th smallest label by j, keeping cell positions.
  Tableau standardize(Tableau const& t);

}  // namespace immaculate
