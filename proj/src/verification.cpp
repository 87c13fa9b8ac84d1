#include "immaculate/verification.hpp"

#include <algorithm>

#include "immaculate/algebra.hpp"
#include "immaculate/bijections.hpp"
#include "immaculate/counting.hpp"
#include "immaculate/error.hpp"
#include "immaculate/immacutations.hpp"
#include "immaculate/young_units.hpp"

namespace immaculate {

  RecurrenceReport verify_recurrence(int n) {
    if (n < 1) {
      throw invalid_input("verify_recurrence: n must be positive");
    }
    RecurrenceReport rep;
    rep.n         = n;
    rep.a         = a_sequence(n).back();
    rep.b         = b_sequence(n).back();
    rep.dimension = dim_immaculate_algebra(n);
    rep.immacutations
        = static_cast<unsigned long>(enumerate_immacutations(n).size());
    if (rep.dimension != rep.a) {
      rep.failures.push_back("dimension " + rep.dimension.get_str()
                             + " != a(n) = " + rep.a.get_str());
    }
    if (rep.immacutations != rep.a) {
      rep.failures.push_back("immacutation count " + rep.immacutations.get_str()
                             + " != a(n) = " + rep.a.get_str());
    }
    if (rep.b != factorial(static_cast<unsigned long>(n))) {
      rep.failures.push_back("b(n) = " + rep.b.get_str() + " != n!");
    }
    return rep;
  }

  std::vector<std::string> const& suite_names() {
    static std::vector<std::string> const names{
        "recurrence", "bijection", "monoid", "hbasis", "young", "embedding"};
    return names;
  }

  int default_max_n(std::string const& suite, bool long_mode) {
    if (suite == "recurrence") {
      return 8;
    }
    if (suite == "bijection") {
      return 6;
    }
    if (suite == "monoid") {
      return 5;
    }
    if (suite == "hbasis") {
      return 4;
    }
    if (suite == "young") {
      return long_mode ? 5 : 4;
    }
    if (suite == "embedding") {
      return 10;
    }
    throw invalid_input("unknown suite \"" + suite + "\"");
  }

  namespace {
    std::string head(std::string const& suite, int n) {
      return suite + " n=" + std::to_string(n) + ": ";
    }

    void absorb(SuiteOutcome&                   out,
                std::string                     line,
                std::vector<std::string> const& failures) {
      out.lines.push_back(std::move(line) + (failures.empty() ? " ok" : " FAIL"));
      for (auto const& f : failures) {
        out.lines.push_back("  " + f);
      }
      out.ok = out.ok && failures.empty();
    }
  }  // namespace

  SuiteOutcome run_suite(std::string const& suite, int max_n, bool long_mode) {
    default_max_n(suite, long_mode);  // rejects unknown names
    if (suite == "young" && max_n > default_max_n("young", true)) {
      throw invalid_input("young suite supports n <= 5");
    }
    if (suite == "young" && max_n > 4 && !long_mode) {
      throw invalid_input("young suite with n = 5 requires --long");
    }
    SuiteOutcome out;
    for (int n = 1; n <= max_n; ++n) {
      if (suite == "recurrence") {
        auto r = verify_recurrence(n);
        absorb(out,
               head(suite, n) + "a=" + r.a.get_str() + " dim="
                   + r.dimension.get_str() + " immacutations="
                   + r.immacutations.get_str() + " b=" + r.b.get_str(),
               r.failures);
      } else if (suite == "bijection") {
        auto f = verify_bijection_f(n);
        absorb(out,
               head(suite, n) + "f on " + std::to_string(f.pairs) + " pairs",
               f.failures);
        if (n < max_n) {
          auto p = verify_phi(n);
          absorb(out,
                 head(suite, n) + "phi domain " + std::to_string(p.domain)
                     + " onto " + std::to_string(p.image) + " pairs",
                 p.failures);
        }
      } else if (suite == "monoid") {
        auto m = verify_monoid(n);
        absorb(out,
               head(suite, n) + std::to_string(m.size) + " elements, "
                   + std::to_string(m.triples_checked)
                   + " triples, identity t" + std::to_string(m.identity + 1),
               m.failures);
      } else if (suite == "hbasis") {
        auto h = verify_h_basis(n);
        absorb(out,
               head(suite, n) + "det " + rational_string(h.determinant) + ", "
                   + std::to_string(h.products_checked) + " products",
               h.failures);
      } else if (suite == "young") {
        auto y = verify_young_units(n);
        absorb(out,
               head(suite, n) + std::to_string(y.units) + " units, "
                   + std::to_string(y.products_checked) + " products, rank "
                   + std::to_string(y.rank),
               y.failures);
      } else if (suite == "embedding") {
        auto e = embedding_check(n);
        absorb(out,
               head(suite, n) + "n! = " + e.sum_f_squared.get_str()
                   + " <= " + e.sum_g_squared.get_str(),
               e.failures);
      }
    }
    return out;
  }

}  // namespace immaculate
