#include "immaculate/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "immaculate/algebra.hpp"
#include "immaculate/bijections.hpp"
#include "immaculate/counting.hpp"
#include "immaculate/error.hpp"
#include "immaculate/immacutations.hpp"
#include "immaculate/json_io.hpp"
#include "immaculate/tableaux.hpp"
#include "immaculate/verification.hpp"
#include "immaculate/young_units.hpp"

namespace immaculate::cli {

  namespace {
    using nlohmann::json;

    // Integers are written by hand so values beyond 64 bits stay exact.
    std::string integer_list(std::vector<Integer> const& values,
                             bool                        as_json) {
      std::string out = as_json ? "[" : "";
      for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) {
          out += as_json ? "," : " ";
        }
        out += values[i].get_str();
      }
      return as_json ? out + "]" : out;
    }

    std::string element_id(std::size_t index) {
      return "t" + std::to_string(index + 1);
    }

    ////////////////////////////////////////////////////////////////////////
    // count
    ////////////////////////////////////////////////////////////////////////

    struct CountOptions {
      std::string        what;
      std::optional<int> n;
      std::string        shape;
      std::string        content;
      std::string        format = "text";
    };

    int require_n(CountOptions const& o, int minimum) {
      if (!o.n || *o.n < minimum) {
        throw invalid_input("--what " + o.what + " needs --n >= "
                            + std::to_string(minimum));
      }
      return *o.n;
    }

    Composition require_shape(std::string const& text, std::string const& flag) {
      if (text.empty()) {
        throw invalid_input("missing " + flag);
      }
      return parse_composition(text);
    }

    int run_count(CountOptions const& o, std::ostream& out) {
      bool const as_json = o.format == "json";
      if (o.what == "a" || o.what == "b") {
        int n = require_n(o, 0);
        out << integer_list(o.what == "a" ? a_sequence(n) : b_sequence(n),
                            as_json)
            << "\n";
      } else if (o.what == "dim") {
        int                  n = require_n(o, 1);
        std::vector<Integer> values;
        for (int k = 1; k <= n; ++k) {
          values.push_back(dim_immaculate_algebra(k));
        }
        out << integer_list(values, as_json) << "\n";
      } else if (o.what == "g") {
        out << g_count(require_shape(o.shape, "--shape")).get_str() << "\n";
      } else if (o.what == "f") {
        Partition lambda(require_shape(o.shape, "--shape").parts());
        out << f_count(lambda).get_str() << "\n";
      } else {
        out << kostka_count(require_shape(o.shape, "--shape"),
                            require_shape(o.content, "--content"))
                   .get_str()
            << "\n";
      }
      return success;
    }

    ////////////////////////////////////////////////////////////////////////
    // enumerate
    ////////////////////////////////////////////////////////////////////////

    struct EnumerateOptions {
      std::string        what;
      std::string        shape;
      std::string        content;
      std::string        klass;
      std::optional<int> n;
      std::string        order  = "lex";
      std::string        format = "text";
    };

    int run_enumerate(EnumerateOptions const& o, std::ostream& out) {
      bool const as_json = o.format == "json";
      if (o.what == "tableaux") {
        auto shape    = require_shape(o.shape, "--shape");
        auto tableaux = o.content.empty()
                            ? enumerate_standard_immaculate(shape)
                            : enumerate_immaculate(shape,
                                                   parse_composition(o.content));
        if (as_json) {
          json doc = json::array();
          for (auto const& t : tableaux) {
            doc.push_back(to_json(t));
          }
          out << doc.dump() << "\n";
        } else {
          for (auto const& t : tableaux) {
            out << to_text(t) << "\n";
          }
        }
      } else if (o.what == "immacutations") {
        if (!o.n || *o.n < 1) {
          throw invalid_input("enumerate immacutations needs --n >= 1");
        }
        auto all = enumerate_immacutations(*o.n);
        std::optional<ImmacutationClass> wanted;
        if (!o.klass.empty()) {
          wanted = parse_int_list(o.klass);
          // Validates the class.
          class_to_shape(*o.n, *wanted);
        }
        json doc = json::array();
        for (std::size_t i = 0; i < all.size(); ++i) {
          if (wanted && all[i].klass != *wanted) {
            continue;
          }
          if (as_json) {
            doc.push_back(to_json(all[i]));
          } else {
            out << element_id(i) << " " << to_text(all[i]) << "\n";
          }
        }
        if (as_json) {
          out << doc.dump() << "\n";
        }
      } else {
        if (!o.n || *o.n < 0) {
          throw invalid_input("enumerate compositions needs --n >= 0");
        }
        if (o.order == "triangle" && *o.n < 1) {
          throw invalid_input("triangle order needs --n >= 1");
        }
        auto list = o.order == "triangle" ? compositions_in_triangle_order(*o.n)
                                          : compositions_of(*o.n);
        if (as_json) {
          json doc = json::array();
          for (auto const& c : list) {
            doc.push_back(to_json(c));
          }
          out << doc.dump() << "\n";
        } else {
          for (auto const& c : list) {
            auto s = to_string(c);
            out << s.substr(1, s.size() - 2) << "\n";
          }
        }
      }
      return success;
    }

    ////////////////////////////////////////////////////////////////////////
    // map
    ////////////////////////////////////////////////////////////////////////

    struct MapOptions {
      std::string direction;
      std::string input;
      std::string format = "json";
    };

    json map_one(std::string const& direction, json const& doc) {
      if (direction == "tab2imm") {
        auto pair = tableau_pair_from_json(doc);
        return to_json(tableaux_to_immacutation(pair));
      }
      return to_json(immacutation_to_tableaux(immacutation_from_json(doc)));
    }

    int run_map(MapOptions const& o, std::istream& in, std::ostream& out) {
      json doc;
      try {
        if (o.input == "-") {
          doc = json::parse(in);
        } else {
          std::ifstream file(o.input);
          if (!file) {
            throw invalid_input("cannot read " + o.input);
          }
          doc = json::parse(file);
        }
      } catch (json::exception const& e) {
        throw invalid_input(std::string("malformed JSON: ") + e.what());
      }
      json result;
      if (doc.is_array()) {
        result = json::array();
        for (auto const& item : doc) {
          result.push_back(map_one(o.direction, item));
        }
      } else {
        result = map_one(o.direction, doc);
      }
      out << result.dump() << "\n";
      return success;
    }

    ////////////////////////////////////////////////////////////////////////
    // cayley
    ////////////////////////////////////////////////////////////////////////

    constexpr int max_cayley_n = 6;

    int run_cayley(int n, std::string const& format, std::ostream& out) {
      if (n < 1 || n > max_cayley_n) {
        throw invalid_input("cayley supports 1 <= n <= "
                            + std::to_string(max_cayley_n));
      }
      auto const table = cayley_table(n);
      auto const size  = table.elements.size();
      if (format == "csv") {
        out << "id";
        for (std::size_t j = 0; j < size; ++j) {
          out << "," << element_id(j);
        }
        out << "\n";
        for (std::size_t i = 0; i < size; ++i) {
          out << element_id(i);
          for (std::size_t j = 0; j < size; ++j) {
            out << "," << element_id(table.table[i][j]);
          }
          out << "\n";
        }
      } else if (format == "markdown") {
        out << "|   |";
        for (std::size_t j = 0; j < size; ++j) {
          out << " " << element_id(j) << " |";
        }
        out << "\n|---|";
        for (std::size_t j = 0; j < size; ++j) {
          out << "---|";
        }
        out << "\n";
        for (std::size_t i = 0; i < size; ++i) {
          out << "| " << element_id(i) << " |";
          for (std::size_t j = 0; j < size; ++j) {
            out << " " << element_id(table.table[i][j]) << " |";
          }
          out << "\n";
        }
      } else {
        json elements = json::array();
        json rows     = json::array();
        for (std::size_t i = 0; i < size; ++i) {
          json e  = to_json(table.elements[i]);
          e["id"] = element_id(i);
          elements.push_back(std::move(e));
          json row = json::array();
          for (std::size_t j = 0; j < size; ++j) {
            row.push_back(element_id(table.table[i][j]));
          }
          rows.push_back(std::move(row));
        }
        json doc{{"order", n}, {"elements", elements}, {"table", rows}};
        out << doc.dump() << "\n";
      }
      return success;
    }

    ////////////////////////////////////////////////////////////////////////
    // verify
    ////////////////////////////////////////////////////////////////////////

    int run_verify(std::string const&        suite,
                   std::optional<int> const& max_n,
                   bool                      long_mode,
                   std::ostream&             out) {
      if (max_n && *max_n < 1) {
        throw invalid_input("--max-n must be positive");
      }
      std::vector<std::string> suites;
      if (suite == "all") {
        suites = suite_names();
      } else {
        suites.push_back(suite);
      }
      bool ok = true;
      for (auto const& s : suites) {
        int limit = max_n ? *max_n : default_max_n(s, long_mode);
        if (suite == "all" && s == "young") {
          limit = std::min(limit, default_max_n("young", long_mode));
        }
        auto outcome = run_suite(s, limit, long_mode);
        for (auto const& line : outcome.lines) {
          out << line << "\n";
        }
        ok = ok && outcome.ok;
      }
      out << (ok ? "all checks passed" : "verification FAILED") << "\n";
      return ok ? success : verification_failed;
    }

    ////////////////////////////////////////////////////////////////////////
    // young-units
    ////////////////////////////////////////////////////////////////////////

    constexpr int max_young_n = 5;

    int run_young_units(int                n,
                        bool               check,
                        bool               long_mode,
                        std::string const& format,
                        std::ostream&      out) {
      if (n < 1 || n > max_young_n) {
        throw invalid_input("young-units supports 1 <= n <= "
                            + std::to_string(max_young_n));
      }
      if (check) {
        auto outcome = run_suite("young", n, long_mode);
        for (auto const& line : outcome.lines) {
          out << line << "\n";
        }
        return outcome.ok ? success : verification_failed;
      }
      json doc = json::array();
      for (auto const& lambda : partitions_of(n)) {
        YoungUnits units(lambda);
        for (std::size_t i = 1; i <= units.dim(); ++i) {
          for (std::size_t j = 1; j <= units.dim(); ++j) {
            auto const& e = units.unit(i, j);
            if (format == "json") {
              json terms = json::array();
              for (auto const& [p, c] : e.terms()) {
                terms.push_back({{"perm", p.images()},
                                 {"coeff", rational_string(c)}});
              }
              doc.push_back({{"shape", lambda.parts()},
                             {"i", i},
                             {"j", j},
                             {"terms", terms}});
            } else {
              out << "e^" << lambda << "_{" << i << "," << j << "} =";
              for (auto const& [p, c] : e.terms()) {
                out << " " << rational_string(c) << "*[";
                for (std::size_t k = 0; k < p.images().size(); ++k) {
                  out << (k > 0 ? "," : "") << p.images()[k];
                }
                out << "]";
              }
              out << "\n";
            }
          }
        }
      }
      if (format == "json") {
        out << doc.dump() << "\n";
      }
      return success;
    }
  }  // namespace

  int run(std::vector<std::string> const& args,
          std::ostream&                   out,
          std::ostream&                   err) {
    CLI::App app{"Exact combinatorics of immaculate tableaux, immacutations "
                 "and the immaculate algebra",
                 "immaculate"};
    app.require_subcommand(1);

    CountOptions count;
    auto*        count_cmd
        = app.add_subcommand("count", "Sequence values and tableau counts");
    count_cmd->add_option("--what", count.what, "a|b|dim|g|f|kostka")
        ->required()
        ->check(CLI::IsMember({"a", "b", "dim", "g", "f", "kostka"}));
    count_cmd->add_option("--n", count.n, "Largest index");
    count_cmd->add_option("--shape", count.shape, "Shape, e.g. 2,1,2");
    count_cmd->add_option("--content", count.content, "Content composition");
    count_cmd->add_option("--format", count.format, "json|text")
        ->check(CLI::IsMember({"json", "text"}));

    EnumerateOptions enumerate;
    auto*            enum_cmd
        = app.add_subcommand("enumerate", "List combinatorial objects");
    enum_cmd->add_option("what", enumerate.what,
                         "tableaux|immacutations|compositions")
        ->required()
        ->check(CLI::IsMember({"tableaux", "immacutations", "compositions"}));
    enum_cmd->add_option("--shape", enumerate.shape, "Tableau shape");
    enum_cmd->add_option("--content", enumerate.content,
                         "Content (default: standard)");
    enum_cmd->add_option("--n", enumerate.n, "Order or size");
    enum_cmd->add_option("--class", enumerate.klass,
                         "Immacutation class, e.g. 3,1,0");
    enum_cmd->add_option("--order", enumerate.order,
                         "Composition order: lex|triangle")
        ->check(CLI::IsMember({"lex", "triangle"}));
    enum_cmd->add_option("--format", enumerate.format, "json|text")
        ->check(CLI::IsMember({"json", "text"}));

    MapOptions map;
    auto*      map_cmd = app.add_subcommand(
        "map", "Apply the tableau-pair/immacutation bijection");
    map_cmd->add_option("--direction", map.direction, "tab2imm|imm2tab")
        ->required()
        ->check(CLI::IsMember({"tab2imm", "imm2tab"}));
    map_cmd->add_option("--input", map.input, "JSON file, or - for stdin")
        ->required();
    map_cmd->add_option("--format", map.format, "json")
        ->check(CLI::IsMember({"json"}));

    int         cayley_n = 0;
    std::string cayley_format = "csv";
    auto*       cayley_cmd
        = app.add_subcommand("cayley", "Monoid table over immacutations");
    cayley_cmd->add_option("--n", cayley_n, "Order")->required();
    cayley_cmd->add_option("--format", cayley_format, "csv|json|markdown")
        ->check(CLI::IsMember({"csv", "json", "markdown"}));

    std::string        suite;
    std::optional<int> max_n;
    bool               verify_long = false;
    auto*              verify_cmd
        = app.add_subcommand("verify", "Run exhaustive verification suites");
    verify_cmd->add_option("--suite", suite)
        ->required()
        ->check(CLI::IsMember({"recurrence", "bijection", "monoid", "hbasis",
                               "young", "embedding", "all"}));
    verify_cmd->add_option("--max-n", max_n, "Largest n checked");
    verify_cmd->add_flag("--long", verify_long, "Enable n = 5 for Young units");

    int         young_n = 0;
    bool        young_check = false;
    bool        young_long  = false;
    std::string young_format = "text";
    auto*       young_cmd    = app.add_subcommand(
        "young-units", "Young's matrix units for the symmetric group algebra");
    young_cmd->add_option("--n", young_n, "Degree")->required();
    young_cmd->add_flag("--check", young_check, "Verify instead of printing");
    young_cmd->add_flag("--long", young_long, "Allow n = 5 with --check");
    young_cmd->add_option("--format", young_format, "json|text")
        ->check(CLI::IsMember({"json", "text"}));

    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (CLI::ParseError const& e) {
      int code = app.exit(e, out, err);
      return code == 0 ? success : bad_input;
    }

    try {
      if (count_cmd->parsed()) {
        return run_count(count, out);
      }
      if (enum_cmd->parsed()) {
        return run_enumerate(enumerate, out);
      }
      if (map_cmd->parsed()) {
        return run_map(map, std::cin, out);
      }
      if (cayley_cmd->parsed()) {
        return run_cayley(cayley_n, cayley_format, out);
      }
      if (verify_cmd->parsed()) {
        return run_verify(suite, max_n, verify_long, out);
      }
      return run_young_units(
          young_n, young_check, young_long, young_format, out);
    } catch (invalid_input const& e) {
      err << "error: " << e.what() << "\n";
      return bad_input;
    }
  }

}  // namespace immaculate::cli
