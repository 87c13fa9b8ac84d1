#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "immaculate/immacutations.hpp"
#include "immaculate/tableaux.hpp"

namespace immaculate {

  //! Two standard immaculate tableaux of a common shape of size k together
  //! with two subsets of {1..n} of size n - k.
  struct QuadrupleInput {
    Tableau first;
    Tableau second;
    IntSet  first_set;
    IntSet  second_set;

    bool operator==(QuadrupleInput const&) const = default;
  };

  //! Two standard immaculate tableaux of a common shape.
  struct TableauPair {
    Tableau first;
    Tableau second;

    Composition const& shape() const noexcept { return first.shape(); }
    bool operator==(TableauPair const&) const = default;
    auto operator<=>(TableauPair const&) const = default;
  };

  bool is_valid_quadruple(QuadrupleInput const& q, int n);
  bool is_valid_pair(TableauPair const& p);

  //! Builds the pair with n + 1 cells whose bottom rows are
  //! (1, s + 1 for s in each set) and whose upper rows are the input tableaux
  //! relabelled order-preservingly onto the unused labels of {2..n+1}.
  TableauPair phi(QuadrupleInput const& q, int n);

  //! Inverse of phi for the n with n + 1 = number of cells of the pair.
  QuadrupleInput phi_inverse(TableauPair const& p);

  //! The bijection from same-shape pairs of size n to order-n immacutations.
  Immacutation tableaux_to_immacutation(TableauPair const& p);

  //! Inverse of tableaux_to_immacutation, assembled by repeated use of phi.
  TableauPair immacutation_to_tableaux(Immacutation const& t);

  //! Every same-shape pair of standard immaculate tableaux of size n, grouped
  //! by shape in lex order.
  std::vector<TableauPair> all_tableau_pairs(int n);

  //! Every element of the domain of phi for the given n.
  std::vector<QuadrupleInput> all_quadruples(int n);

  using PairToImmacutation = std::function<Immacutation(TableauPair const&)>;
  using ImmacutationToPair = std::function<TableauPair(Immacutation const&)>;
  using PhiMap = std::function<TableauPair(QuadrupleInput const&, int)>;

  struct BijectionReport {
    int                      n = 0;
    std::size_t              pairs = 0;
    std::size_t              immacutations = 0;
    std::vector<std::string> failures;

    bool ok() const noexcept { return failures.empty(); }
  };

  //! Exhaustive check at order n that forward maps every same-shape pair to
  //! a valid immacutation with the matching class, that the image is all
  //! a(n) immacutations, and that backward inverts forward on both sides.
  BijectionReport
  verify_bijection_f(int                       n,
                     PairToImmacutation const& forward  = tableaux_to_immacutation,
                     ImmacutationToPair const& backward = immacutation_to_tableaux);

  struct PhiReport {
    int                      n = 0;
    std::size_t              domain = 0;
    std::size_t              image = 0;
    std::vector<std::string> failures;

    bool ok() const noexcept { return failures.empty(); }
  };

  //! Exhaustive check that map sends the whole domain for n injectively onto
  //! the a(n + 1) same-shape pairs with n + 1 cells, inverted by phi_inverse.
  PhiReport verify_phi(int n, PhiMap const& map = phi);

}  // namespace immaculate
