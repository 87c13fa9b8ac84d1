#include "immaculate/compositions.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <ostream>

#include "immaculate/error.hpp"

namespace immaculate {

  Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
      if (p < 1) {
        throw invalid_input("composition parts must be positive, found "
                            + std::to_string(p));
      }
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
  }

  Composition Composition::vertical(int n) {
    return Composition(std::vector<int>(static_cast<std::size_t>(n), 1));
  }

  Composition Composition::horizontal(int n) {
    return n == 0 ? Composition() : Composition({n});
  }

  Partition::Partition(std::vector<int> parts)
      : composition_(std::move(parts)) {
    auto const& p = composition_.parts();
    for (std::size_t i = 1; i < p.size(); ++i) {
      if (p[i] > p[i - 1]) {
        throw invalid_input("partition parts must be weakly decreasing: "
                            + to_string(composition_));
      }
    }
  }

  namespace {
    void compositions_rec(int               remaining,
                          std::vector<int>& prefix,
                          std::vector<Composition>& out) {
      if (remaining == 0) {
        out.emplace_back(prefix);
        return;
      }
      for (int p = 1; p <= remaining; ++p) {
        prefix.push_back(p);
        compositions_rec(remaining - p, prefix, out);
        prefix.pop_back();
      }
    }

    void partitions_rec(int                     remaining,
                        int                     max_part,
                        std::vector<int>&       prefix,
                        std::vector<Partition>& out) {
      if (remaining == 0) {
        out.emplace_back(prefix);
        return;
      }
      for (int p = std::min(remaining, max_part); p >= 1; --p) {
        prefix.push_back(p);
        partitions_rec(remaining - p, p, prefix, out);
        prefix.pop_back();
      }
    }
  }  // namespace

  std::vector<Composition> compositions_of(int n) {
    if (n < 0) {
      throw invalid_input("compositions_of: n must be nonnegative");
    }
    std::vector<Composition> out;
    std::vector<int>         prefix;
    // Parts chosen in increasing order at each position yield lex order.
    compositions_rec(n, prefix, out);
    return out;
  }

  std::vector<Partition> partitions_of(int n) {
    if (n < 0) {
      throw invalid_input("partitions_of: n must be nonnegative");
    }
    std::vector<Partition> out;
    std::vector<int>       prefix;
    partitions_rec(n, n, prefix, out);
    return out;
  }

  std::strong_ordering lex_compare(Composition const& a, Composition const& b) {
    return a <=> b;
  }

  bool is_vertical(Composition const& a) {
    return !a.empty()
           && std::all_of(a.begin(), a.end(), [](int p) { return p == 1; });
  }

  bool is_horizontal(Composition const& a) {
    return a.length() == 1;
  }

  namespace {
    // 0 for (1^n), 1 for (n), 2 otherwise. For n = 1 both coincide at 0.
    int triangle_rank(Composition const& a) {
      if (is_vertical(a)) {
        return 0;
      }
      if (is_horizontal(a)) {
        return 1;
      }
      return 2;
    }
  }  // namespace

  std::strong_ordering triangle_compare(Composition const& a,
                                        Composition const& b) {
    if (a.size() != b.size()) {
      throw invalid_input("triangle_compare: compositions of different sizes "
                          + to_string(a) + " and " + to_string(b));
    }
    if (a.size() < 1) {
      throw invalid_input("triangle_compare: compositions must be nonempty");
    }
    int ra = triangle_rank(a), rb = triangle_rank(b);
    if (ra != rb) {
      return ra <=> rb;
    }
    return a <=> b;
  }

  std::vector<Composition> compositions_in_triangle_order(int n) {
    auto all = compositions_of(n);
    if (n >= 1) {
      std::stable_sort(
          all.begin(), all.end(), [](auto const& x, auto const& y) {
            return triangle_compare(x, y) < 0;
          });
    }
    return all;
  }

  std::vector<int> parse_int_list(std::string_view text) {
    std::vector<int> out;
    // Trim surrounding whitespace.
    while (!text.empty() && text.front() == ' ') {
      text.remove_prefix(1);
    }
    while (!text.empty() && text.back() == ' ') {
      text.remove_suffix(1);
    }
    if (text.empty()) {
      return out;
    }
    std::size_t start = 0;
    while (true) {
      auto end   = text.find(',', start);
      auto token = text.substr(start, end == std::string_view::npos
                                          ? std::string_view::npos
                                          : end - start);
      while (!token.empty() && token.front() == ' ') {
        token.remove_prefix(1);
      }
      while (!token.empty() && token.back() == ' ') {
        token.remove_suffix(1);
      }
      int  value = 0;
      auto res   = std::from_chars(token.data(), token.data() + token.size(),
                                 value);
      if (token.empty() || res.ec != std::errc()
          || res.ptr != token.data() + token.size() || value < 0) {
        throw invalid_input("malformed integer list: \"" + std::string(text)
                            + "\"");
      }
      out.push_back(value);
      if (end == std::string_view::npos) {
        break;
      }
      start = end + 1;
    }
    return out;
  }

  Composition parse_composition(std::string_view text) {
    return Composition(parse_int_list(text));
  }

  std::string to_string(Composition const& a) {
    std::string out = "(";
    for (std::size_t i = 0; i < a.length(); ++i) {
      if (i > 0) {
        out += ",";
      }
      out += std::to_string(a[i]);
    }
    return out + ")";
  }

  std::ostream& operator<<(std::ostream& os, Composition const& a) {
    return os << to_string(a);
  }

  std::ostream& operator<<(std::ostream& os, Partition const& a) {
    return os << to_string(a.as_composition());
  }

}  // namespace immaculate
