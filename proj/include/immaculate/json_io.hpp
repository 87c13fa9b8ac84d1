#pragma once

#include <json.hpp>

#include "immaculate/bijections.hpp"
#include "immaculate/compositions.hpp"
#include "immaculate/immacutations.hpp"
#include "immaculate/tableaux.hpp"

// Wire formats:
//   tableau       {"shape":[2,1,2],"rows":[[1,4],[2],[3,5]]}   rows bottom-up
//   tableau pair  {"first":<tableau>,"second":<tableau>}
//   immacutation  {"order":6,"class":[5,3,2,0],"entries":[[],[],[4],[2],...]}
// The readers throw invalid_input on malformed or inconsistent documents.

namespace immaculate {

  nlohmann::json to_json(Composition const& a);
  nlohmann::json to_json(Tableau const& t);
  nlohmann::json to_json(TableauPair const& p);
  nlohmann::json to_json(Immacutation const& t);

  Composition  composition_from_json(nlohmann::json const& j);
  Tableau      tableau_from_json(nlohmann::json const& j);
  TableauPair  tableau_pair_from_json(nlohmann::json const& j);
  Immacutation immacutation_from_json(nlohmann::json const& j);

}  // namespace immaculate
