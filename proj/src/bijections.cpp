#include "immaculate/bijections.hpp"

#include <algorithm>
#include <set>

#include "immaculate/counting.hpp"
#include "immaculate/error.hpp"

namespace immaculate {

  namespace {
    bool is_subset_of_range(IntSet const& s, int n) {
      for (std::size_t j = 0; j < s.size(); ++j) {
        if (s[j] < 1 || s[j] > n || (j > 0 && s[j - 1] >= s[j])) {
          return false;
        }
      }
      return true;
    }

    // Bottom row (1, s+1, ...) and the remaining labels of {2..n+1}.
    Tableau stack(Tableau const& upper, IntSet const& set, int n) {
      Tableau::Row bottom{1};
      for (int s : set) {
        bottom.push_back(s + 1);
      }
      std::vector<int> unused;
      for (int v = 2; v <= n + 1; ++v) {
        if (!std::binary_search(bottom.begin() + 1, bottom.end(), v)) {
          unused.push_back(v);
        }
      }
      std::vector<Tableau::Row> rows{std::move(bottom)};
      for (auto const& r : upper.rows()) {
        Tableau::Row relabelled;
        relabelled.reserve(r.size());
        for (int v : r) {
          relabelled.push_back(unused[static_cast<std::size_t>(v - 1)]);
        }
        rows.push_back(std::move(relabelled));
      }
      return Tableau(std::move(rows));
    }

    // Shifted first-row set (without the 1-cell) and the standardized rest.
    std::pair<IntSet, Tableau> unstack(Tableau const& t) {
      IntSet set;
      for (std::size_t j = 1; j < t.row(0).size(); ++j) {
        set.push_back(t.row(0)[j] - 1);
      }
      std::vector<Tableau::Row> rest(t.rows().begin() + 1, t.rows().end());
      return {std::move(set), standardize(Tableau(std::move(rest)))};
    }
  }  // namespace

  bool is_valid_quadruple(QuadrupleInput const& q, int n) {
    int k = q.first.num_cells();
    return n >= 0 && q.first.shape() == q.second.shape() && k <= n
           && is_standard_immaculate(q.first)
           && is_standard_immaculate(q.second)
           && static_cast<int>(q.first_set.size()) == n - k
           && static_cast<int>(q.second_set.size()) == n - k
           && is_subset_of_range(q.first_set, n)
           && is_subset_of_range(q.second_set, n);
  }

  bool is_valid_pair(TableauPair const& p) {
    return p.first.shape() == p.second.shape()
           && is_standard_immaculate(p.first)
           && is_standard_immaculate(p.second);
  }

  TableauPair phi(QuadrupleInput const& q, int n) {
    if (!is_valid_quadruple(q, n)) {
      throw invalid_input("phi: invalid quadruple for n = " + std::to_string(n));
    }
    return {stack(q.first, q.first_set, n), stack(q.second, q.second_set, n)};
  }

  QuadrupleInput phi_inverse(TableauPair const& p) {
    if (!is_valid_pair(p) || p.first.empty()) {
      throw invalid_input("phi_inverse: not a nonempty same-shape pair of "
                          "standard immaculate tableaux");
    }
    auto [s1, t1] = unstack(p.first);
    auto [s2, t2] = unstack(p.second);
    return {std::move(t1), std::move(t2), std::move(s1), std::move(s2)};
  }

  Immacutation tableaux_to_immacutation(TableauPair const& p) {
    if (!is_valid_pair(p) || p.first.empty()) {
      throw invalid_input("tableaux_to_immacutation: not a nonempty "
                          "same-shape pair of standard immaculate tableaux");
    }
    Immacutation t{p.first.num_cells(), {}, {}};
    Tableau      first  = p.first;
    Tableau      second = p.second;
    while (!first.empty()) {
      auto [s1, rest1] = unstack(first);
      auto [s2, rest2] = unstack(second);
      t.entries.push_back(std::move(s1));
      t.entries.push_back(std::move(s2));
      t.klass.push_back(rest1.num_cells());
      first  = std::move(rest1);
      second = std::move(rest2);
    }
    return t;
  }

  TableauPair immacutation_to_tableaux(Immacutation const& t) {
    if (!validate(t)) {
      throw invalid_input("immacutation_to_tableaux: invalid immacutation "
                          + to_text(t));
    }
    TableauPair pair;
    // Innermost slot pair first; stage i produces klass[i-1] cells (order
    // cells for i = 0) from phi with n = that count minus one.
    for (std::size_t i = t.klass.size(); i-- > 0;) {
      int cells = i == 0 ? t.order : t.klass[i - 1];
      pair      = phi({std::move(pair.first),
                  std::move(pair.second),
                  t.entries[2 * i],
                  t.entries[2 * i + 1]},
                 cells - 1);
    }
    return pair;
  }

  std::vector<TableauPair> all_tableau_pairs(int n) {
    std::vector<TableauPair> out;
    for (auto const& alpha : compositions_of(n)) {
      auto tableaux = enumerate_standard_immaculate(alpha);
      for (auto const& a : tableaux) {
        for (auto const& b : tableaux) {
          out.push_back({a, b});
        }
      }
    }
    return out;
  }

  std::vector<QuadrupleInput> all_quadruples(int n) {
    std::vector<QuadrupleInput> out;
    for (int k = 0; k <= n; ++k) {
      auto subsets = k_subsets(n, n - k);
      for (auto const& p : all_tableau_pairs(k)) {
        for (auto const& s1 : subsets) {
          for (auto const& s2 : subsets) {
            out.push_back({p.first, p.second, s1, s2});
          }
        }
      }
    }
    return out;
  }

  namespace {
    constexpr std::size_t max_reported_failures = 20;

    void report(std::vector<std::string>& failures, std::string message) {
      if (failures.size() < max_reported_failures) {
        failures.push_back(std::move(message));
      }
    }

    std::string describe(TableauPair const& p) {
      return "[" + to_text(p.first) + " | " + to_text(p.second) + "]";
    }
  }  // namespace

  BijectionReport verify_bijection_f(int                       n,
                                     PairToImmacutation const& forward,
                                     ImmacutationToPair const& backward) {
    BijectionReport rep;
    rep.n      = n;
    auto pairs = all_tableau_pairs(n);
    auto imms  = enumerate_immacutations(n);
    rep.pairs         = pairs.size();
    rep.immacutations = imms.size();
    Integer a_n       = a_sequence(n).back();
    if (Integer(static_cast<unsigned long>(pairs.size())) != a_n
        || Integer(static_cast<unsigned long>(imms.size())) != a_n) {
      report(rep.failures, "pair or immacutation count differs from a(n)");
    }

    std::set<std::vector<IntSet>> image;
    for (auto const& p : pairs) {
      Immacutation t;
      try {
        t = forward(p);
      } catch (invalid_input const& e) {
        report(rep.failures, describe(p) + ": " + e.what());
        continue;
      }
      if (!validate(t) || t.order != n) {
        report(rep.failures,
               describe(p) + " maps to invalid " + to_text(t));
        continue;
      }
      if (shape_of(t) != p.shape() || t.klass != shape_to_class(p.shape())) {
        report(rep.failures,
               describe(p) + " maps to " + to_text(t) + " of the wrong class");
      }
      image.insert(t.entries);
      try {
        if (backward(t) != p) {
          report(rep.failures, describe(p) + " does not round-trip");
        }
      } catch (invalid_input const& e) {
        report(rep.failures, to_text(t) + ": " + e.what());
      }
    }
    if (image.size() != pairs.size()) {
      report(rep.failures, "image has " + std::to_string(image.size())
                               + " elements, expected "
                               + std::to_string(pairs.size()));
    }
    for (auto const& t : imms) {
      try {
        if (forward(backward(t)) != t) {
          report(rep.failures, to_text(t) + " does not round-trip");
        }
      } catch (invalid_input const& e) {
        report(rep.failures, to_text(t) + ": " + e.what());
      }
    }
    return rep;
  }

  PhiReport verify_phi(int n, PhiMap const& map) {
    PhiReport rep;
    rep.n       = n;
    auto domain = all_quadruples(n);
    rep.domain  = domain.size();
    std::set<TableauPair> image;
    for (auto const& q : domain) {
      TableauPair p;
      try {
        p = map(q, n);
      } catch (invalid_input const& e) {
        report(rep.failures, e.what());
        continue;
      }
      if (!is_valid_pair(p) || p.first.num_cells() != n + 1) {
        report(rep.failures, "image " + describe(p) + " is not a valid pair");
        continue;
      }
      if (!image.insert(p).second) {
        report(rep.failures, "collision at " + describe(p));
      }
      if (phi_inverse(p) != q) {
        report(rep.failures, "phi_inverse does not recover the quadruple for "
                                 + describe(p));
      }
    }
    rep.image = image.size();
    Integer expected = a_sequence(n + 1).back();
    if (Integer(static_cast<unsigned long>(rep.image)) != expected) {
      report(rep.failures, "image size " + std::to_string(rep.image)
                               + " differs from a(n+1) = "
                               + expected.get_str());
    }
    auto codomain = all_tableau_pairs(n + 1);
    if (std::set<TableauPair>(codomain.begin(), codomain.end()) != image) {
      report(rep.failures, "image is not the set of all same-shape pairs");
    }
    return rep;
  }

}  // namespace immaculate
