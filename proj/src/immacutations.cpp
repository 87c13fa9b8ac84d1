#include "immaculate/immacutations.hpp"

#include <algorithm>

#include "immaculate/error.hpp"

namespace immaculate {

  namespace {
    bool is_admissible_class(int n, ImmacutationClass const& klass) {
      if (klass.empty() || klass.back() != 0 || klass.front() > n - 1) {
        return false;
      }
      for (std::size_t i = 1; i < klass.size(); ++i) {
        if (klass[i] >= klass[i - 1]) {
          return false;
        }
      }
      return true;
    }

    // Slot pair i draws from {1..bound} with the given size.
    int slot_bound(int n, ImmacutationClass const& klass, std::size_t i) {
      return (i == 0 ? n : klass[i - 1]) - 1;
    }

    int slot_size(int n, ImmacutationClass const& klass, std::size_t i) {
      return slot_bound(n, klass, i) - klass[i];
    }

    bool is_set_within(IntSet const& s, int bound, int size) {
      if (static_cast<int>(s.size()) != size) {
        return false;
      }
      for (std::size_t j = 0; j < s.size(); ++j) {
        if (s[j] < 1 || s[j] > bound || (j > 0 && s[j - 1] >= s[j])) {
          return false;
        }
      }
      return true;
    }

    std::strong_ordering compare_set_words(IntSet const& a, IntSet const& b) {
      static IntSet const zero{0};
      return (a.empty() ? zero : a) <=> (b.empty() ? zero : b);
    }
  }  // namespace

  bool validate(Immacutation const& t) {
    if (t.order < 1 || !is_admissible_class(t.order, t.klass)
        || t.entries.size() != 2 * t.klass.size()) {
      return false;
    }
    for (std::size_t i = 0; i < t.klass.size(); ++i) {
      int bound = slot_bound(t.order, t.klass, i);
      int size  = slot_size(t.order, t.klass, i);
      if (!is_set_within(t.entries[2 * i], bound, size)
          || !is_set_within(t.entries[2 * i + 1], bound, size)) {
        return false;
      }
    }
    return true;
  }

  std::vector<ImmacutationClass> immacutation_classes(int n) {
    if (n < 1) {
      throw invalid_input("immacutation order must be positive");
    }
    std::vector<ImmacutationClass> out;
    for (auto const& alpha : compositions_in_triangle_order(n)) {
      out.push_back(shape_to_class(alpha));
    }
    return out;
  }

  Composition class_to_shape(int n, ImmacutationClass const& klass) {
    if (!is_admissible_class(n, klass)) {
      throw invalid_input("not an admissible class for order "
                          + std::to_string(n));
    }
    std::vector<int> parts;
    int              previous = n;
    for (int lambda : klass) {
      parts.push_back(previous - lambda);
      previous = lambda;
    }
    return Composition(std::move(parts));
  }

  ImmacutationClass shape_to_class(Composition const& shape) {
    ImmacutationClass klass;
    int               remaining = shape.size();
    for (int part : shape) {
      remaining -= part;
      klass.push_back(remaining);
    }
    return klass;
  }

  Composition shape_of(Immacutation const& t) {
    if (!validate(t)) {
      throw invalid_input("shape_of: invalid immacutation " + to_text(t));
    }
    return class_to_shape(t.order, t.klass);
  }

  std::vector<IntSet> k_subsets(int m, int k) {
    std::vector<IntSet> out;
    if (k < 0 || k > m) {
      return out;
    }
    IntSet current(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) {
      current[static_cast<std::size_t>(j)] = j + 1;
    }
    while (true) {
      out.push_back(current);
      int j = k - 1;
      while (j >= 0 && current[static_cast<std::size_t>(j)] == m - k + j + 1) {
        --j;
      }
      if (j < 0) {
        break;
      }
      ++current[static_cast<std::size_t>(j)];
      for (int l = j + 1; l < k; ++l) {
        current[static_cast<std::size_t>(l)]
            = current[static_cast<std::size_t>(l - 1)] + 1;
      }
    }
    return out;
  }

  std::vector<Immacutation>
  enumerate_immacutations(int n, ImmacutationClass const& klass) {
    if (n < 1 || !is_admissible_class(n, klass)) {
      throw invalid_input("not an admissible class for order "
                          + std::to_string(n));
    }
    // Every slot of a class has a fixed size, so the odometer below (last
    // slot fastest, subsets in lex order) emits tuples in lex order.
    std::vector<std::vector<IntSet>> choices;
    for (std::size_t i = 0; i < klass.size(); ++i) {
      auto subsets
          = k_subsets(slot_bound(n, klass, i), slot_size(n, klass, i));
      choices.push_back(subsets);
      choices.push_back(std::move(subsets));
    }
    std::vector<Immacutation> out;
    std::vector<std::size_t>  odometer(choices.size(), 0);
    while (true) {
      Immacutation t{n, klass, {}};
      t.entries.reserve(choices.size());
      for (std::size_t s = 0; s < choices.size(); ++s) {
        t.entries.push_back(choices[s][odometer[s]]);
      }
      out.push_back(std::move(t));
      std::size_t s = choices.size();
      while (s > 0) {
        --s;
        if (++odometer[s] < choices[s].size()) {
          break;
        }
        odometer[s] = 0;
        if (s == 0) {
          return out;
        }
      }
    }
  }

  std::vector<Immacutation> enumerate_immacutations(int n) {
    std::vector<Immacutation> out;
    for (auto const& klass : immacutation_classes(n)) {
      auto slice = enumerate_immacutations(n, klass);
      out.insert(out.end(),
                 std::make_move_iterator(slice.begin()),
                 std::make_move_iterator(slice.end()));
    }
    return out;
  }

  std::strong_ordering immacutation_compare(Immacutation const& a,
                                            Immacutation const& b) {
    if (a.order != b.order) {
      throw invalid_input("immacutation_compare: orders differ");
    }
    if (auto c = triangle_compare(shape_of(a), shape_of(b)); c != 0) {
      return c;
    }
    std::size_t common = std::min(a.entries.size(), b.entries.size());
    for (std::size_t i = 0; i < common; ++i) {
      if (auto c = compare_set_words(a.entries[i], b.entries[i]); c != 0) {
        return c;
      }
    }
    return a.entries.size() <=> b.entries.size();
  }

  std::string to_text(Immacutation const& t) {
    std::string out = "(";
    for (std::size_t i = 0; i < t.entries.size(); ++i) {
      if (i > 0) {
        out += ", ";
      }
      out += "{";
      for (std::size_t j = 0; j < t.entries[i].size(); ++j) {
        if (j > 0) {
          out += ",";
        }
        out += std::to_string(t.entries[i][j]);
      }
      out += "}";
    }
    return out + ")";
  }

}  // namespace immaculate
