#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace immaculate {

  //! A finite tuple of positive integers.
  //!
  //! The empty tuple is the unique composition of 0. Comparison operators are
  //! lexicographic on the parts, so a proper prefix precedes its extensions.
  class Composition {
   public:
    Composition() = default;
    explicit Composition(std::vector<int> parts);
    Composition(std::initializer_list<int> parts)
        : Composition(std::vector<int>(parts)) {}

    std::vector<int> const& parts() const noexcept { return parts_; }
    //! Sum of the parts.
    int size() const noexcept { return size_; }
    //! Number of parts.
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    int operator[](std::size_t i) const { return parts_[i]; }

    auto begin() const noexcept { return parts_.begin(); }
    auto end() const noexcept { return parts_.end(); }

    bool operator==(Composition const&) const = default;
    std::strong_ordering operator<=>(Composition const& other) const {
      return parts_ <=> other.parts_;
    }

    static Composition vertical(int n);
    static Composition horizontal(int n);

   private:
    std::vector<int> parts_;
    int              size_ = 0;
  };

  //! A composition whose parts are weakly decreasing.
  class Partition {
   public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts)
        : Partition(std::vector<int>(parts)) {}

    std::vector<int> const& parts() const noexcept {
      return composition_.parts();
    }
    int         size() const noexcept { return composition_.size(); }
    std::size_t length() const noexcept { return composition_.length(); }
    int         operator[](std::size_t i) const { return composition_[i]; }

    Composition const& as_composition() const noexcept { return composition_; }

    bool operator==(Partition const&) const = default;
    std::strong_ordering operator<=>(Partition const& other) const {
      return composition_ <=> other.composition_;
    }

   private:
    Composition composition_;
  };

  //! All compositions of n in increasing lexicographic order.
  std::vector<Composition> compositions_of(int n);

  //! All partitions of n in decreasing lexicographic order, (n) first.
  std::vector<Partition> partitions_of(int n);

  std::strong_ordering lex_compare(Composition const& a, Composition const& b);

  //! The order (1^n), (n), then every other composition lexicographically.
  //!
  //! Throws invalid_input unless both arguments are compositions of the same
  //! n >= 1.
  std::strong_ordering triangle_compare(Composition const& a,
                                        Composition const& b);

  //! compositions_of(n) sorted by triangle_compare.
  std::vector<Composition> compositions_in_triangle_order(int n);

  bool is_vertical(Composition const& a);
  bool is_horizontal(Composition const& a);

  //! Parses "2,1,2"; the empty string parses to the empty composition.
  Composition parse_composition(std::string_view text);
  //! Parses a comma separated list of nonnegative integers, used for classes.
  std::vector<int> parse_int_list(std::string_view text);

  std::string   to_string(Composition const& a);
  std::ostream& operator<<(std::ostream& os, Composition const& a);
  std::ostream& operator<<(std::ostream& os, Partition const& a);

}  // namespace immaculate
