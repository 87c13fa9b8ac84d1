#include "immaculate/json_io.hpp"

#include "immaculate/error.hpp"

namespace immaculate {

  namespace {
    std::vector<int> int_array(nlohmann::json const& j, char const* what) {
      if (!j.is_array()) {
        throw invalid_input(std::string(what) + " must be an integer array");
      }
      std::vector<int> out;
      for (auto const& v : j) {
        if (!v.is_number_integer()) {
          throw invalid_input(std::string(what) + " must be an integer array");
        }
        out.push_back(v.get<int>());
      }
      return out;
    }

    nlohmann::json const& field(nlohmann::json const& j, char const* key) {
      if (!j.is_object() || !j.contains(key)) {
        throw invalid_input(std::string("missing field \"") + key + "\"");
      }
      return j.at(key);
    }
  }  // namespace

  nlohmann::json to_json(Composition const& a) {
    return a.parts();
  }

  nlohmann::json to_json(Tableau const& t) {
    nlohmann::json rows = nlohmann::json::array();
    for (auto const& r : t.rows()) {
      rows.push_back(r);
    }
    return {{"shape", to_json(t.shape())}, {"rows", rows}};
  }

  nlohmann::json to_json(TableauPair const& p) {
    return {{"first", to_json(p.first)}, {"second", to_json(p.second)}};
  }

  nlohmann::json to_json(Immacutation const& t) {
    nlohmann::json entries = nlohmann::json::array();
    for (auto const& s : t.entries) {
      entries.push_back(s);
    }
    return {{"order", t.order}, {"class", t.klass}, {"entries", entries}};
  }

  Composition composition_from_json(nlohmann::json const& j) {
    return Composition(int_array(j, "composition"));
  }

  Tableau tableau_from_json(nlohmann::json const& j) {
    auto shape = composition_from_json(field(j, "shape"));
    auto const& rows_json = field(j, "rows");
    if (!rows_json.is_array()) {
      throw invalid_input("tableau rows must be an array");
    }
    std::vector<Tableau::Row> rows;
    for (auto const& r : rows_json) {
      rows.push_back(int_array(r, "tableau row"));
    }
    return Tableau(std::move(shape), std::move(rows));
  }

  TableauPair tableau_pair_from_json(nlohmann::json const& j) {
    return {tableau_from_json(field(j, "first")),
            tableau_from_json(field(j, "second"))};
  }

  Immacutation immacutation_from_json(nlohmann::json const& j) {
    auto const& order = field(j, "order");
    if (!order.is_number_integer()) {
      throw invalid_input("immacutation order must be an integer");
    }
    Immacutation t;
    t.order = order.get<int>();
    t.klass = int_array(field(j, "class"), "immacutation class");
    auto const& entries = field(j, "entries");
    if (!entries.is_array()) {
      throw invalid_input("immacutation entries must be an array");
    }
    for (auto const& e : entries) {
      t.entries.push_back(int_array(e, "immacutation entry"));
    }
    return t;
  }

}  // namespace immaculate
