#include "immaculate/young_units.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>

#include "immaculate/counting.hpp"
#include "immaculate/error.hpp"
#include "immaculate/exact_matrix.hpp"

namespace immaculate {

  ////////////////////////////////////////////////////////////////////////
  // Permutation
  ////////////////////////////////////////////////////////////////////////

  Permutation::Permutation(std::vector<int> images)
      : images_(std::move(images)) {
    std::vector<bool> seen(images_.size() + 1, false);
    for (int v : images_) {
      if (v < 1 || v > static_cast<int>(images_.size())
          || seen[static_cast<std::size_t>(v)]) {
        throw invalid_input("not a permutation in one-line notation");
      }
      seen[static_cast<std::size_t>(v)] = true;
    }
  }

  Permutation Permutation::identity(int n) {
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    return Permutation(std::move(images));
  }

  Permutation Permutation::transposition(int n, int a, int b) {
    auto images = identity(n).images_;
    std::swap(images.at(static_cast<std::size_t>(a - 1)),
              images.at(static_cast<std::size_t>(b - 1)));
    return Permutation(std::move(images));
  }

  Permutation Permutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) {
      inv[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i) + 1;
    }
    return Permutation(std::move(inv));
  }

  int Permutation::sign() const {
    // Parity from the cycle decomposition.
    std::vector<bool> visited(images_.size(), false);
    std::size_t       even_cycles = 0;
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (visited[i]) {
        continue;
      }
      std::size_t length = 0;
      for (std::size_t j = i; !visited[j];
           j         = static_cast<std::size_t>(images_[j] - 1)) {
        visited[j] = true;
        ++length;
      }
      if (length % 2 == 0) {
        ++even_cycles;
      }
    }
    return even_cycles % 2 == 0 ? 1 : -1;
  }

  bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (images_[i] != static_cast<int>(i) + 1) {
        return false;
      }
    }
    return true;
  }

  Permutation compose(Permutation const& p, Permutation const& q) {
    if (p.size() != q.size()) {
      throw invalid_input("compose: permutations of different degrees");
    }
    std::vector<int> images(static_cast<std::size_t>(q.size()));
    for (int x = 1; x <= q.size(); ++x) {
      images[static_cast<std::size_t>(x - 1)] = p(q(x));
    }
    return Permutation(std::move(images));
  }

  std::vector<Permutation> all_permutations(int n) {
    std::vector<Permutation> out;
    auto images = Permutation::identity(n).images();
    do {
      out.emplace_back(images);
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // GroupAlgebraElement
  ////////////////////////////////////////////////////////////////////////

  GroupAlgebraElement::GroupAlgebraElement(Permutation const& p, Rational c)
      : n_(p.size()) {
    add_term(p, c);
  }

  GroupAlgebraElement GroupAlgebraElement::identity(int n) {
    return GroupAlgebraElement(Permutation::identity(n));
  }

  Rational GroupAlgebraElement::coefficient(Permutation const& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void GroupAlgebraElement::add_term(Permutation const& p, Rational const& c) {
    if (p.size() != n_) {
      throw invalid_input("permutation of the wrong degree");
    }
    if (c == 0) {
      return;
    }
    auto [it, inserted] = terms_.try_emplace(p, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) {
        terms_.erase(it);
      }
    }
  }

  GroupAlgebraElement&
  GroupAlgebraElement::operator+=(GroupAlgebraElement const& other) {
    if (other.n_ != n_) {
      throw invalid_input("group algebra elements of different degrees");
    }
    for (auto const& [p, c] : other.terms_) {
      add_term(p, c);
    }
    return *this;
  }

  GroupAlgebraElement&
  GroupAlgebraElement::operator-=(GroupAlgebraElement const& other) {
    if (other.n_ != n_) {
      throw invalid_input("group algebra elements of different degrees");
    }
    for (auto const& [p, c] : other.terms_) {
      add_term(p, -c);
    }
    return *this;
  }

  GroupAlgebraElement& GroupAlgebraElement::operator*=(Rational const& c) {
    if (c == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [p, coeff] : terms_) {
      coeff *= c;
    }
    return *this;
  }

  GroupAlgebraElement operator*(GroupAlgebraElement const& x,
                                GroupAlgebraElement const& y) {
    if (x.n() != y.n()) {
      throw invalid_input("group algebra elements of different degrees");
    }
    GroupAlgebraElement result(x.n());
    for (auto const& [p, a] : x.terms()) {
      for (auto const& [q, b] : y.terms()) {
        result.add_term(compose(p, q), a * b);
      }
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Tableaux and their groups
  ////////////////////////////////////////////////////////////////////////

  InjectiveTableau::InjectiveTableau(Tableau t) : tableau_(std::move(t)) {
    auto const& parts = tableau_.shape().parts();
    if (!std::is_sorted(parts.rbegin(), parts.rend())) {
      throw invalid_input("injective tableau needs a partition shape");
    }
    auto word = tableau_.reading_word();
    std::sort(word.begin(), word.end());
    for (std::size_t i = 0; i < word.size(); ++i) {
      if (word[i] != static_cast<int>(i) + 1) {
        throw invalid_input("injective tableau labels must be 1..n");
      }
    }
  }

  std::vector<std::vector<int>> InjectiveTableau::columns() const {
    std::vector<std::vector<int>> cols;
    if (tableau_.empty()) {
      return cols;
    }
    for (std::size_t j = 0; j < tableau_.row(0).size(); ++j) {
      std::vector<int> col;
      for (auto const& r : tableau_.rows()) {
        if (j < r.size()) {
          col.push_back(r[j]);
        }
      }
      cols.push_back(std::move(col));
    }
    return cols;
  }

  InjectiveTableau act(Permutation const& p, InjectiveTableau const& t) {
    if (p.size() != t.size()) {
      throw invalid_input("act: permutation and tableau of different sizes");
    }
    auto rows = t.tableau().rows();
    for (auto& r : rows) {
      for (auto& v : r) {
        v = p(v);
      }
    }
    return InjectiveTableau(Tableau(t.tableau().shape(), std::move(rows)));
  }

  namespace {
    // All permutations of {1..n} mapping every block onto itself.
    std::vector<Permutation>
    block_stabilizer(int n, std::vector<std::vector<int>> blocks) {
      for (auto& b : blocks) {
        std::sort(b.begin(), b.end());
      }
      std::vector<Permutation> out;
      std::vector<int>         images(static_cast<std::size_t>(n));
      std::iota(images.begin(), images.end(), 1);

      auto rec = [&](auto&& self, std::size_t k) -> void {
        if (k == blocks.size()) {
          out.emplace_back(images);
          return;
        }
        auto arrangement = blocks[k];
        do {
          for (std::size_t i = 0; i < arrangement.size(); ++i) {
            images[static_cast<std::size_t>(blocks[k][i] - 1)] = arrangement[i];
          }
          self(self, k + 1);
        } while (std::next_permutation(arrangement.begin(), arrangement.end()));
      };
      rec(rec, 0);
      std::sort(out.begin(), out.end());
      return out;
    }
  }  // namespace

  std::vector<Permutation> row_group(InjectiveTableau const& t) {
    return block_stabilizer(t.size(), t.tableau().rows());
  }

  std::vector<Permutation> column_group(InjectiveTableau const& t) {
    return block_stabilizer(t.size(), t.columns());
  }

  GroupAlgebraElement P_element(InjectiveTableau const& t) {
    GroupAlgebraElement result(t.size());
    for (auto const& p : row_group(t)) {
      result.add_term(p, 1);
    }
    return result;
  }

  GroupAlgebraElement N_element(InjectiveTableau const& t) {
    GroupAlgebraElement result(t.size());
    for (auto const& p : column_group(t)) {
      result.add_term(p, p.sign());
    }
    return result;
  }

  namespace {
    std::vector<std::pair<std::size_t, std::size_t>>
    label_positions(Tableau const& t) {
      std::vector<std::pair<std::size_t, std::size_t>> pos(
          static_cast<std::size_t>(t.num_cells()));
      for (std::size_t i = 0; i < t.num_rows(); ++i) {
        for (std::size_t j = 0; j < t.row(i).size(); ++j) {
          pos[static_cast<std::size_t>(t.row(i)[j] - 1)] = {i, j};
        }
      }
      return pos;
    }
  }  // namespace

  std::vector<Tableau> yflo_sort(std::vector<Tableau> tableaux) {
    if (!tableaux.empty()) {
      auto const& shape = tableaux.front().shape();
      for (auto const& t : tableaux) {
        if (t.shape() != shape) {
          throw invalid_input("yflo_sort: tableaux of different shapes");
        }
      }
    }
    std::vector<std::pair<std::vector<std::pair<std::size_t, std::size_t>>,
                          Tableau>>
        keyed;
    for (auto& t : tableaux) {
      auto key = label_positions(t);
      keyed.emplace_back(std::move(key), std::move(t));
    }
    std::sort(keyed.begin(), keyed.end(), [](auto const& a, auto const& b) {
      return a.first > b.first;
    });
    std::vector<Tableau> out;
    for (auto& [key, t] : keyed) {
      out.push_back(std::move(t));
    }
    return out;
  }

  Permutation sigma(InjectiveTableau const& t1, InjectiveTableau const& t2) {
    if (t1.tableau().shape() != t2.tableau().shape()) {
      throw invalid_input("sigma: tableaux of different shapes");
    }
    std::vector<int> images(static_cast<std::size_t>(t1.size()));
    for (std::size_t i = 0; i < t1.tableau().num_rows(); ++i) {
      for (std::size_t j = 0; j < t1.tableau().row(i).size(); ++j) {
        images[static_cast<std::size_t>(t2.tableau().row(i)[j] - 1)]
            = t1.tableau().row(i)[j];
      }
    }
    return Permutation(std::move(images));
  }

  ////////////////////////////////////////////////////////////////////////
  // Young's units
  ////////////////////////////////////////////////////////////////////////

  YoungUnits::YoungUnits(Partition shape)
      : YoungUnits(shape, yflo_sort(enumerate_standard_young(shape))) {}

  YoungUnits::YoungUnits(Partition shape, std::vector<Tableau> order)
      : shape_(std::move(shape)), tableaux_(std::move(order)) {
    auto expected = enumerate_standard_young(shape_);
    auto given    = tableaux_;
    std::sort(given.begin(), given.end());
    if (given != expected) {
      throw invalid_input("YoungUnits: order must list every standard "
                          "Young tableau of the shape once");
    }
    int const  n = shape_.size();
    auto const f = tableaux_.size();
    Rational   scale(Integer(static_cast<unsigned long>(f)),
                   factorial(static_cast<unsigned long>(n)));
    scale.canonicalize();
    for (auto const& s : tableaux_) {
      InjectiveTableau t(s);
      gammas_.push_back(scale * (N_element(t) * P_element(t)));
    }
    // rest[j] = (1 - gamma_j) ... (1 - gamma_f), 0-based, rest[f] = 1.
    auto const          one = GroupAlgebraElement::identity(n);
    std::vector<GroupAlgebraElement> rest(f + 1, one);
    for (std::size_t j = f; j-- > 0;) {
      rest[j] = (one - gammas_[j]) * rest[j + 1];
    }
    for (std::size_t i = 0; i < f; ++i) {
      for (std::size_t j = 0; j < f; ++j) {
        auto s = sigma(InjectiveTableau(tableaux_[i]),
                       InjectiveTableau(tableaux_[j]));
        units_.push_back(GroupAlgebraElement(s)
                         * (gammas_[j] * rest[j + 1]));
      }
    }
  }

  GroupAlgebraElement const& YoungUnits::gamma(std::size_t i) const {
    if (i < 1 || i > dim()) {
      throw invalid_input("gamma index out of range");
    }
    return gammas_[i - 1];
  }

  GroupAlgebraElement const& YoungUnits::unit(std::size_t i,
                                              std::size_t j) const {
    if (i < 1 || i > dim() || j < 1 || j > dim()) {
      throw invalid_input("matrix unit index out of range");
    }
    return units_[(i - 1) * dim() + (j - 1)];
  }

  GroupAlgebraElement gamma(Partition const& shape, std::size_t i) {
    return YoungUnits(shape).gamma(i);
  }

  GroupAlgebraElement young_unit(Partition const& shape,
                                 std::size_t      i,
                                 std::size_t      j) {
    return YoungUnits(shape).unit(i, j);
  }

  ////////////////////////////////////////////////////////////////////////
  // Verification
  ////////////////////////////////////////////////////////////////////////

  namespace {
    constexpr std::size_t max_reported_failures = 20;

    void report(std::vector<std::string>& failures, std::string message) {
      if (failures.size() < max_reported_failures) {
        failures.push_back(std::move(message));
      }
    }

    // Unit as num / denom with integer numerators indexed by permutation
    // rank. small holds the numerators when all of them fit comfortably.
    struct DenseUnit {
      Integer                  denom;
      std::vector<Integer>     num;
      std::vector<std::int64_t> small;
      std::vector<std::size_t> support;
    };

    constexpr std::int64_t small_bound = std::int64_t{1} << 40;

    Integer from_int128(__int128 v) {
      bool     negative  = v < 0;
      unsigned __int128 u = negative ? static_cast<unsigned __int128>(-v)
                                     : static_cast<unsigned __int128>(v);
      Integer  hi(static_cast<unsigned long>(u >> 64));
      Integer  lo(static_cast<unsigned long>(u & 0xFFFFFFFFFFFFFFFFULL));
      Integer  r = (hi << 64) + lo;
      return negative ? Integer(-r) : r;
    }

    struct UnitId {
      std::size_t shape, i, j;
    };
  }  // namespace

  YoungReport verify_young_units(int n) {
    if (n < 1) {
      throw invalid_input("verify_young_units: n must be positive");
    }
    YoungReport rep;
    rep.n           = n;
    rep.n_factorial = factorial(static_cast<unsigned long>(n));

    auto const perms = all_permutations(n);
    auto const N     = perms.size();
    std::map<Permutation, std::size_t> rank_of;
    for (std::size_t k = 0; k < N; ++k) {
      rank_of.emplace(perms[k], k);
    }
    std::vector<std::vector<std::uint32_t>> mult(N, std::vector<std::uint32_t>(N));
    for (std::size_t p = 0; p < N; ++p) {
      for (std::size_t q = 0; q < N; ++q) {
        mult[p][q] = static_cast<std::uint32_t>(
            rank_of.at(compose(perms[p], perms[q])));
      }
    }

    std::vector<YoungUnits> families;
    std::vector<UnitId>     ids;
    std::vector<DenseUnit>  dense;
    bool                    all_small = true;
    rep.sum_f_squared                 = 0;
    for (auto const& lambda : partitions_of(n)) {
      families.emplace_back(lambda);
      auto const s = families.size() - 1;
      auto const f = families.back().dim();
      rep.sum_f_squared += Integer(static_cast<unsigned long>(f * f));
      for (std::size_t i = 1; i <= f; ++i) {
        for (std::size_t j = 1; j <= f; ++j) {
          auto const& u = families.back().unit(i, j);
          DenseUnit   d;
          d.denom = 1;
          for (auto const& [p, c] : u.terms()) {
            mpz_lcm(d.denom.get_mpz_t(), d.denom.get_mpz_t(),
                    c.get_den().get_mpz_t());
          }
          d.num.assign(N, Integer(0));
          for (auto const& [p, c] : u.terms()) {
            auto k   = rank_of.at(p);
            d.num[k] = c.get_num() * (d.denom / c.get_den());
            d.support.push_back(k);
            if (abs(d.num[k]) >= small_bound) {
              all_small = false;
            }
          }
          ids.push_back({s, i, j});
          dense.push_back(std::move(d));
        }
      }
    }
    rep.units = dense.size();
    if (all_small) {
      for (auto& d : dense) {
        d.small.resize(N);
        for (std::size_t k = 0; k < N; ++k) {
          d.small[k] = d.num[k].get_si();
        }
      }
    }

    if (rep.sum_f_squared != rep.n_factorial) {
      report(rep.failures, "sum of (f^lambda)^2 is "
                               + rep.sum_f_squared.get_str() + ", not n!");
    }
    if (rep.units != N) {
      report(rep.failures, "number of units differs from n!");
    }

    // Position of unit (shape, i, j) in the flat list.
    std::vector<std::size_t> family_offset;
    {
      std::size_t offset = 0;
      for (auto const& fam : families) {
        family_offset.push_back(offset);
        offset += fam.dim() * fam.dim();
      }
    }
    auto flat = [&](std::size_t s, std::size_t i, std::size_t j) {
      return family_offset[s] + (i - 1) * families[s].dim() + (j - 1);
    };

    std::vector<__int128> acc(N);
    std::vector<Integer>  big_acc(N);
    for (std::size_t a = 0; a < dense.size(); ++a) {
      for (std::size_t b = 0; b < dense.size(); ++b) {
        ++rep.products_checked;
        auto const& da = dense[a];
        auto const& db = dense[b];
        bool const  nonzero
            = ids[a].shape == ids[b].shape && ids[a].j == ids[b].i;
        DenseUnit const* expected
            = nonzero ? &dense[flat(ids[a].shape, ids[a].i, ids[b].j)]
                      : nullptr;
        bool equal = true;
        if (all_small) {
          std::fill(acc.begin(), acc.end(), 0);
          for (auto p : da.support) {
            auto const  x   = static_cast<__int128>(da.small[p]);
            auto const& row = mult[p];
            for (auto q : db.support) {
              acc[row[q]] += x * db.small[q];
            }
          }
          for (std::size_t k = 0; k < N && equal; ++k) {
            if (expected == nullptr) {
              equal = acc[k] == 0;
            } else if (acc[k] != 0 || expected->num[k] != 0) {
              equal = from_int128(acc[k]) * expected->denom
                      == expected->num[k] * da.denom * db.denom;
            }
          }
        } else {
          std::fill(big_acc.begin(), big_acc.end(), Integer(0));
          for (auto p : da.support) {
            for (auto q : db.support) {
              big_acc[mult[p][q]] += da.num[p] * db.num[q];
            }
          }
          for (std::size_t k = 0; k < N && equal; ++k) {
            Integer rhs = expected == nullptr
                              ? Integer(0)
                              : Integer(expected->num[k] * da.denom * db.denom);
            Integer lhs = expected == nullptr
                              ? big_acc[k]
                              : Integer(big_acc[k] * expected->denom);
            equal = lhs == rhs;
          }
        }
        if (!equal) {
          auto const& fa = families[ids[a].shape].shape();
          auto const& fb = families[ids[b].shape].shape();
          report(rep.failures,
                 "e^" + to_string(fa.as_composition()) + "_{"
                     + std::to_string(ids[a].i) + "," + std::to_string(ids[a].j)
                     + "} * e^" + to_string(fb.as_composition()) + "_{"
                     + std::to_string(ids[b].i) + "," + std::to_string(ids[b].j)
                     + "} violates the matrix unit rules");
        }
      }
    }

    RationalMatrix m(dense.size(), std::vector<Rational>(N));
    for (std::size_t a = 0; a < dense.size(); ++a) {
      for (auto k : dense[a].support) {
        m[a][k] = dense[a].num[k];
      }
    }
    rep.rank = rank(std::move(m));
    if (rep.rank != N) {
      report(rep.failures, "units span a space of dimension "
                               + std::to_string(rep.rank));
    }

    GroupAlgebraElement diagonal(n);
    for (auto const& fam : families) {
      for (std::size_t i = 1; i <= fam.dim(); ++i) {
        diagonal += fam.unit(i, i);
      }
    }
    rep.diagonal_sum_is_identity
        = diagonal == GroupAlgebraElement::identity(n);
    if (!rep.diagonal_sum_is_identity) {
      report(rep.failures, "diagonal units do not sum to the identity");
    }
    return rep;
  }

  EmbeddingReport embedding_check(int n) {
    if (n < 1) {
      throw invalid_input("embedding_check: n must be positive");
    }
    EmbeddingReport rep;
    rep.n             = n;
    rep.sum_f_squared = 0;
    for (auto const& lambda : partitions_of(n)) {
      auto young = enumerate_standard_young(lambda);
      for (auto const& t : young) {
        if (!is_standard_immaculate(t)) {
          report(rep.failures, "standard Young tableau " + to_text(t)
                                   + " is not standard immaculate");
        }
      }
      Integer f = young.size();
      Integer g = g_count(lambda.as_composition());
      if (f > g) {
        report(rep.failures, "f > g for " + to_string(lambda.as_composition()));
      }
      rep.sum_f_squared += f * f;
      rep.rows.push_back({lambda, f, g});
    }
    rep.sum_g_squared = dim_immaculate_algebra(n);
    if (rep.sum_f_squared != factorial(static_cast<unsigned long>(n))) {
      report(rep.failures, "sum of (f^lambda)^2 differs from n!");
    }
    if (rep.sum_f_squared > rep.sum_g_squared) {
      report(rep.failures, "n! exceeds the immaculate algebra dimension");
    }
    if (rep.sum_g_squared != a_sequence(n).back()) {
      report(rep.failures, "sum of (g^alpha)^2 differs from a(n)");
    }
    return rep;
  }

}  // namespace immaculate
