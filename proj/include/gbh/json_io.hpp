// JSON encodings for the documented interchange schemas: spaces and point
// sets, contexts with facts, code trees, branch trees, tree maps, and
// forcing conditions.  Parsing reports the offending field path.
#pragma once

#include <string>

#include <json.hpp>

#include "gbh/borelcode.hpp"
#include "gbh/calculus.hpp"
#include "gbh/forcing.hpp"
#include "gbh/pointclass.hpp"
#include "gbh/space.hpp"
#include "gbh/treemap.hpp"

namespace gbh::io {

using nlohmann::json;

// {"kappa":"regular|singular","cof_kappa":"omega|oltk|kappa",
//  "space":[flags],"facts":[{"ord":{"base":"k+","rel":"gt","bound":"3"}}]}
pc::Situation situation_from_json(const json& j);
json to_json(const pc::Situation& s);

json to_json(const pc::OrderFact& f);
pc::OrderFact order_fact_from_json(const json& j);

json to_json(const cal::Verdict& v);

// {"b":2,"d":2,"points":["00","01","10","11"]}
space::SpacePtr space_from_json(const json& j, std::size_t cap = space::kDefaultPointCap);
json to_json(const space::FiniteSpace& sp);
json to_json(const space::PointSet& s);

// {"nodes":{"":["a","b"],"a":[],"b":[]},"labels":{"a":"0","b":"1"}}
code::CodeTree code_from_json(const json& j);
json to_json(const code::CodeTree& c);

// {"branches":[[[letter,bit,z],...],...]}
json to_json(const code::SuslinTree& t);

// {"source_depth":1,"source_alphabet":2,
//  "target_depth":2,"target_alphabet":[3,2],
//  "map":{"":"","0":"a0","1":"b0"}}
tree::TreeMap treemap_from_json(const json& j);
json to_json(const tree::TreeMap& m);

// {"f":{"00":"1"},"R":[["0","10"]],"A":["..."],"B":["..."]} plus the space
forcing::Condition condition_from_json(const json& j);
json to_json(const forcing::Condition& c);

json load_json_file(const std::string& path);

}  // namespace gbh::io
