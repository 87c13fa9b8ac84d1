#include "immaculate/tableaux.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "immaculate/error.hpp"

namespace immaculate {

  namespace {
    std::vector<int> row_lengths(std::vector<Tableau::Row> const& rows) {
      std::vector<int> lengths;
      lengths.reserve(rows.size());
      for (auto const& r : rows) {
        lengths.push_back(static_cast<int>(r.size()));
      }
      return lengths;
    }
  }  // namespace

  Tableau::Tableau(std::vector<Row> rows)
      : shape_(row_lengths(rows)), rows_(std::move(rows)) {}

  Tableau::Tableau(Composition shape, std::vector<Row> rows)
      : shape_(std::move(shape)), rows_(std::move(rows)) {
    if (row_lengths(rows_) != shape_.parts()) {
      throw invalid_input("tableau rows do not match shape "
                          + to_string(shape_));
    }
  }

  std::vector<int> Tableau::reading_word() const {
    std::vector<int> word;
    word.reserve(static_cast<std::size_t>(shape_.size()));
    for (auto const& r : rows_) {
      word.insert(word.end(), r.begin(), r.end());
    }
    return word;
  }

  std::strong_ordering Tableau::operator<=>(Tableau const& other) const {
    if (auto c = shape_ <=> other.shape_; c != 0) {
      return c;
    }
    return rows_ <=> other.rows_;
  }

  bool is_immaculate(Tableau const& t, Composition const& content) {
    if (t.num_cells() != content.size()) {
      return false;
    }
    std::vector<int> seen(content.length() + 1, 0);
    for (auto const& r : t.rows()) {
      for (std::size_t j = 0; j < r.size(); ++j) {
        int v = r[j];
        if (v < 1 || v > static_cast<int>(content.length())) {
          return false;
        }
        ++seen[static_cast<std::size_t>(v)];
        if (j > 0 && r[j - 1] > v) {
          return false;
        }
      }
    }
    for (std::size_t i = 0; i < content.length(); ++i) {
      if (seen[i + 1] != content[i]) {
        return false;
      }
    }
    for (std::size_t i = 1; i < t.num_rows(); ++i) {
      if (t.row(i - 1).front() >= t.row(i).front()) {
        return false;
      }
    }
    return true;
  }

  bool is_standard_immaculate(Tableau const& t) {
    return is_immaculate(t, Composition::vertical(t.num_cells()));
  }

  bool is_standard_young(Tableau const& t) {
    auto const& parts = t.shape().parts();
    if (!std::is_sorted(parts.rbegin(), parts.rend())) {
      return false;
    }
    if (!is_standard_immaculate(t)) {
      return false;
    }
    for (std::size_t i = 1; i < t.num_rows(); ++i) {
      for (std::size_t j = 0; j < t.row(i).size(); ++j) {
        if (t.row(i - 1)[j] >= t.row(i)[j]) {
          return false;
        }
      }
    }
    return true;
  }

  namespace {
    struct StandardImmaculateSearch {
      Composition const&        shape;
      std::vector<Tableau::Row> rows;
      std::vector<Tableau>      out;

      // Labels are placed in increasing order, so rows are started in order
      // and every row stays increasing automatically.
      void run(int label, std::size_t started) {
        if (label > shape.size()) {
          out.emplace_back(shape, rows);
          return;
        }
        for (std::size_t r = 0; r < started; ++r) {
          if (static_cast<int>(rows[r].size()) < shape[r]) {
            rows[r].push_back(label);
            run(label + 1, started);
            rows[r].pop_back();
          }
        }
        if (started < shape.length()) {
          rows[started].push_back(label);
          run(label + 1, started + 1);
          rows[started].pop_back();
        }
      }
    };

    struct ImmaculateSearch {
      Composition const&        shape;
      std::vector<int>          remaining;  // remaining[v] copies of label v
      std::vector<Tableau::Row> rows;
      std::vector<Tableau>      out;

      void fill_row(std::size_t r, std::size_t pos, int min_label) {
        if (pos == static_cast<std::size_t>(shape[r])) {
          run(r + 1);
          return;
        }
        for (int v = min_label; v < static_cast<int>(remaining.size()); ++v) {
          if (remaining[static_cast<std::size_t>(v)] == 0) {
            continue;
          }
          --remaining[static_cast<std::size_t>(v)];
          rows[r].push_back(v);
          fill_row(r, pos + 1, v);
          rows[r].pop_back();
          ++remaining[static_cast<std::size_t>(v)];
        }
      }

      void run(std::size_t r) {
        if (r == shape.length()) {
          out.emplace_back(shape, rows);
          return;
        }
        int first_min = r == 0 ? 1 : rows[r - 1].front() + 1;
        for (int v = first_min; v < static_cast<int>(remaining.size()); ++v) {
          if (remaining[static_cast<std::size_t>(v)] == 0) {
            continue;
          }
          --remaining[static_cast<std::size_t>(v)];
          rows[r].push_back(v);
          fill_row(r, 1, v);
          rows[r].pop_back();
          ++remaining[static_cast<std::size_t>(v)];
        }
      }
    };

    struct StandardYoungSearch {
      Partition const&          shape;
      std::vector<Tableau::Row> rows;
      std::vector<Tableau>      out;

      void run(int label) {
        if (label > shape.size()) {
          out.emplace_back(shape.as_composition(), rows);
          return;
        }
        for (std::size_t r = 0; r < shape.length(); ++r) {
          auto len = rows[r].size();
          if (static_cast<int>(len) < shape[r]
              && (r == 0 || rows[r - 1].size() > len)) {
            rows[r].push_back(label);
            run(label + 1);
            rows[r].pop_back();
          }
        }
      }
    };
  }  // namespace

  std::vector<Tableau> enumerate_standard_immaculate(Composition const& shape) {
    StandardImmaculateSearch search{shape, {}, {}};
    search.rows.resize(shape.length());
    search.run(1, 0);
    std::sort(search.out.begin(), search.out.end());
    return std::move(search.out);
  }

  std::vector<Tableau> enumerate_immaculate(Composition const& shape,
                                            Composition const& content) {
    if (shape.size() != content.size()) {
      return {};
    }
    ImmaculateSearch search{shape, {0}, {}, {}};
    search.remaining.insert(
        search.remaining.end(), content.begin(), content.end());
    search.rows.resize(shape.length());
    search.run(0);
    std::sort(search.out.begin(), search.out.end());
    return std::move(search.out);
  }

  Integer g_count(Composition const& shape) {
    static std::mutex                     mtx;
    static std::map<Composition, Integer> cache;
    {
      std::lock_guard<std::mutex> lock(mtx);
      if (auto it = cache.find(shape); it != cache.end()) {
        return it->second;
      }
    }
    Integer value = enumerate_standard_immaculate(shape).size();
    std::lock_guard<std::mutex> lock(mtx);
    cache.emplace(shape, value);
    return value;
  }

  Integer kostka_count(Composition const& shape, Composition const& content) {
    return enumerate_immaculate(shape, content).size();
  }

  std::vector<Tableau> enumerate_standard_young(Partition const& shape) {
    StandardYoungSearch search{shape, {}, {}};
    search.rows.resize(shape.length());
    search.run(1);
    std::sort(search.out.begin(), search.out.end());
    return std::move(search.out);
  }

  Integer f_count(Partition const& shape) {
    return enumerate_standard_young(shape).size();
  }

  std::string to_text(Tableau const& t) {
    if (t.empty()) {
      return "()";
    }
    std::string out;
    for (std::size_t i = 0; i < t.num_rows(); ++i) {
      if (i > 0) {
        out += " / ";
      }
      for (std::size_t j = 0; j < t.row(i).size(); ++j) {
        if (j > 0) {
          out += ' ';
        }
        out += std::to_string(t.row(i)[j]);
      }
    }
    return out;
  }

  Tableau standardize(Tableau const& t) {
    auto word = t.reading_word();
    std::sort(word.begin(), word.end());
    std::vector<Tableau::Row> rows = t.rows();
    for (auto& r : rows) {
      for (auto& v : r) {
        v = static_cast<int>(std::lower_bound(word.begin(), word.end(), v)
                             - word.begin())
            + 1;
      }
    }
    return Tableau(t.shape(), std::move(rows));
  }

}  // namespace immaculate
