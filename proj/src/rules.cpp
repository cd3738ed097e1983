#include "gbh/rules.hpp"

namespace gbh::cal {

const std::vector<Rule>& rule_table() {
  static const std::vector<Rule> table = {
      // structural facts about the hierarchy
      {"incl-refl", "every class is contained in itself"},
      {"incl-delta-lower",
       "the ambiguous class at a level is contained in the additive and in the multiplicative class at that level"},
      {"incl-def-cross",
       "a multiplicative class is contained in every higher additive class, and dually, directly from the inductive definition of the hierarchy"},
      {"incl-above-2", "the hierarchy is increasing from level 2 upward on every space"},
      {"incl-1-to-3",
       "open sets sit inside the multiplicative class of level 2, hence inside every class from level 3 upward"},
      {"incl-1-to-2",
       "on a regular space of weight at most the base cardinal, every open set is a small union of closed sets, so level 1 is contained in level 2"},
      {"incl-1-to-2-fine",
       "when every open set is a union of cof(kappa)-many closed sets, level 1 of the fine hierarchy is contained in level 2"},
      {"incl-into-delta",
       "above level 2, the additive and multiplicative classes at a level are contained in the ambiguous class of every higher level"},
      {"incl-delta-mono", "the ambiguous classes grow with the level on every space"},
      {"dual-invol",
       "complementation exchanges the additive and multiplicative classes and fixes the ambiguous and the full Borel class"},
      // properness
      {"proper-delta",
       "strictly below the order of the space, the ambiguous class is strictly smaller than the additive and the multiplicative class at the same level"},
      {"proper-union",
       "strictly below the order of the space, the ambiguous class at a level contains a set outside every class of strictly lower level"},
      {"proper-delta-fine",
       "over a singular base with clopen-decomposable opens, strictly below the fine order the even-level ambiguous class is strictly smaller than the additive class"},
      {"proper-union-fine",
       "over a singular base with clopen-decomposable opens, strictly below the fine order the ambiguous class at a level contains a set outside every strictly lower fine class"},
      // parity translation between the fine (kappa) and coarse (kappa-plus) hierarchies
      {"parity-even",
       "over a singular base whose opens are unions of cof(kappa)-many closed sets, the fine hierarchy at even index 1+a equals the coarse hierarchy at index 1+a/2, kind for kind"},
      {"parity-odd",
       "over a singular base whose opens are unions of cof(kappa)-many closed sets, the fine classes at odd index are self-dual, so the ambiguous class is the canonical form"},
      {"kplus-fixed", "coarse-base classes are already in canonical form"},
      {"borel-merge",
       "over a singular base the fine and coarse Borel classes coincide, since a kappa-algebra is automatically a kappa-plus-algebra"},
      // closure table
      {"clos-union-kappa",
       "additive classes are closed under unions of length up to the base cardinal, the generating length of the coarse algebra being regular"},
      {"clos-inter-hat",
       "an additive class is closed under intersections shorter than its level's cofinality parameter: cof(kappa) at successor levels, the level's own cofinality at limit levels"},
      {"clos-delta-hat",
       "an ambiguous class is closed under complements and under unions and intersections shorter than its level's cofinality parameter"},
      {"clos-delta-compl", "ambiguous classes are closed under complements by definition"},
      {"clos-level1-additivity",
       "closure of level 1 under short intersections is exactly the additivity of the space; it holds when the space is cof(kappa)-additive"},
      {"clos-odd-algebra",
       "over a singular base with clopen-decomposable opens, each odd fine level is a self-dual algebra closed under unions and intersections shorter than cof(kappa)"},
      {"clos-even-fine",
       "over a singular base with clopen-decomposable opens, even fine levels inherit the coarse closure table: unions up to kappa and intersections below the cofinality parameter"},
      // optimality of the closure table
      {"opt-compl",
       "while the hierarchy has not collapsed at the level, the additive and multiplicative classes are not closed under complements"},
      {"opt-inter-hat",
       "while the hierarchy has not collapsed at the level, the additive class is not closed under intersections of size equal to the cofinality parameter, and dually for unions"},
      {"opt-delta-hat",
       "while the hierarchy has not collapsed at the level, the ambiguous class is not closed under unions or under intersections of the cofinality parameter's size"},
      {"opt-odd-fine",
       "over a singular base with clopen-decomposable opens, while the fine hierarchy has not collapsed at an odd level, that self-dual level is not closed under unions or intersections of size cof(kappa)"},
      // order translation
      {"ord-even-translate",
       "over a singular base with clopen-decomposable opens, the coarse order is at most 1+a exactly when the fine order is at most 1+2a"},
      {"ord-limit-fixed",
       "if either order is bounded by a limit ordinal, the coarse and fine orders coincide at that bound"},
      {"ord-weaken", "an order bound may be relaxed to any larger bound"},
      {"ord-fact", "an order bound supplied as a fact about the space"},
      // collapse criteria
      {"coll-selfdual",
       "when the generating length of the algebra is regular, self-duality of the additive class at a level bounds the order of the space by that level"},
      {"coll-selfdual-even",
       "over a singular base with clopen-decomposable opens, self-duality at an even fine index bounds the fine order by that index"},
      {"coll-inter-gamma",
       "if levels 1 and their complements sit inside the additive class and that class is closed under intersections shorter than the generating length, the order is bounded by the level"},
      {"coll-eq-up",
       "if a class at a level coincides with an additive or multiplicative class at a strictly higher level, the order is bounded by the lower level"},
      {"coll-delta-eq",
       "when the generating length is regular, coincidence of a level's class with a strictly higher ambiguous class bounds the order by the lower level"},
      // universal sets
      {"univ-sigma-pi",
       "the additive and multiplicative coarse classes at every level admit universal sets parametrized by the generalized Cantor space"},
      {"univ-even-fine",
       "even fine levels coincide with coarse levels and so admit universal sets parametrized by the generalized Cantor space"},
      {"univ-odd-none",
       "odd fine levels are self-dual, and a class that is self-dual on a space admits no universal set over that space"},
      {"univ-selfdual-none",
       "a class that is self-dual on a space admits no universal set parametrized by the space itself, by the diagonal argument"},
      // the full Borel class and order bounds
      {"borel-top", "every class of the hierarchy is contained in the full Borel class"},
      {"borel-algebra",
       "the full Borel class is closed under complements and under unions and intersections of length up to the base cardinal"},
      {"ord-def", "the order of the space is the least level at which a single class exhausts the Borel sets"},
      {"ord-le-collapse",
       "when the order of the space is bounded by a level, all classes from that level upward coincide with the full Borel class"},
      // function hierarchy
      {"fun-ord-eq",
       "when the target space is Hausdorff with at least two points, the hierarchy of measurable functions and the hierarchy of sets on the source have the same order"},
  };
  return table;
}

const Rule* find_rule(const std::string& id) {
  for (const auto& r : rule_table()) {
    if (r.id == id) return &r;
  }
  return nullptr;
}

std::string to_string(Answer a) {
  switch (a) {
    case Answer::holds: return "holds";
    case Answer::fails: return "fails";
    case Answer::unknown: return "unknown";
  }
  return "?";
}

namespace {
std::vector<TraceStep> steps_for(const std::vector<std::string>& ids) {
  std::vector<TraceStep> steps;
  for (const auto& id : ids) {
    const Rule* r = find_rule(id);
    if (!r) fail("UnknownRule", "no rule with id '" + id + "'");
    steps.push_back({r->id, r->statement});
  }
  return steps;
}
}  // namespace

Verdict holds(const std::vector<std::string>& rule_ids) {
  if (rule_ids.empty()) fail("EmptyTrace", "a holds verdict needs at least one rule");
  return Verdict{Answer::holds, steps_for(rule_ids), ""};
}

Verdict fails(const std::vector<std::string>& rule_ids) {
  if (rule_ids.empty()) fail("EmptyTrace", "a fails verdict needs at least one rule");
  return Verdict{Answer::fails, steps_for(rule_ids), ""};
}

Verdict unknown(const std::string& note) { return Verdict{Answer::unknown, {}, note}; }

bool audit(const Verdict& v) {
  if (v.answer != Answer::unknown && v.trace.empty()) return false;
  for (const auto& step : v.trace) {
    const Rule* r = find_rule(step.rule_id);
    if (!r || r->statement != step.statement) return false;
  }
  return true;
}

}  // namespace gbh::cal
