#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gbh/calculus.hpp"

using namespace gbh;
using namespace gbh::cal;
using pc::Base;
using pc::Kind;
using pc::Pointclass;
using pc::Rel;
using pc::Situation;
using pc::SpaceFlag;

namespace {

Pointclass pcls(const std::string& s) { return pc::parse_pointclass(s); }

Situation regular_ctx(std::initializer_list<SpaceFlag> flags = {}) {
  Situation s;
  s.ctx.kappa_kind = pc::CardinalContext::KappaKind::regular;
  s.ctx.cof_kappa = ord::CofClass::kappa;
  for (auto f : flags) s.space.set(f);
  return s;
}

Situation singular_ctx(std::initializer_list<SpaceFlag> flags = {
                           SpaceFlag::opens_are_cofk_unions_of_closed},
                       ord::CofClass cof = ord::CofClass::omega) {
  Situation s;
  s.ctx.kappa_kind = pc::CardinalContext::KappaKind::singular;
  s.ctx.cof_kappa = cof;
  for (auto f : flags) s.space.set(f);
  return s;
}

pc::OrderFact gt_fact(const std::string& bound, Base b = Base::kappa_plus) {
  return pc::OrderFact{Rel::gt, ord::parse_ordinal(bound), b};
}

}  // namespace

TEST_CASE("normalize: parity translation") {
  Situation sing = singular_ctx();
  CHECK(normalize(pcls("Sigma(0,3,k)"), sing) == pcls("Sigma(0,2,k+)"));
  CHECK(normalize(pcls("Sigma(0,2,k)"), sing) == pcls("Delta(0,2,k)"));
  CHECK(normalize(pcls("Pi(0,5,k+)"), sing) == pcls("Pi(0,5,k+)"));
  CHECK(normalize(pcls("Sigma(0,1,k)"), sing) == pcls("Sigma(0,1,k+)"));
  CHECK(normalize(pcls("Sigma(0,w,k)"), sing) == pcls("Sigma(0,w,k+)"));
  CHECK(normalize(pcls("Sigma(0,w+2,k)"), sing) == pcls("Sigma(0,w+1,k+)"));
  CHECK(normalize(pcls("Delta(0,w+1,k)"), sing) == pcls("Delta(0,w+1,k)"));
  CHECK(normalize(pcls("Borel(k)"), sing) == pcls("Borel(k+)"));
  CHECK(normalize(pcls("Sigma(0,L(cofk)+2,k)"), sing) == pcls("Sigma(0,L(cofk)+1,k+)"));

  // missing assumptions block the fine base
  CHECK_THROWS_AS(normalize(pcls("Sigma(0,3,k)"), regular_ctx()), MissingAssumption);
  CHECK_THROWS_AS(normalize(pcls("Sigma(0,3,k)"), singular_ctx({})), MissingAssumption);
}

TEST_CASE("normalize is idempotent over sampled levels") {
  Situation sing = singular_ctx();
  std::vector<std::string> levels = {"1",   "2",   "3",    "4",      "5",       "w",
                                     "w+1", "w+2", "w*2",  "w*2+1",  "w*2+5",   "L(cofk)",
                                     "L(cofk)+1", "L(cofk)+2", "L(oltk)+3", "L(kappa)+4"};
  for (const auto& l : levels) {
    for (Kind k : {Kind::Sigma, Kind::Pi, Kind::Delta}) {
      Pointclass p{k, ord::parse_ordinal(l), Base::kappa};
      Pointclass n1 = normalize(p, sing);
      CHECK(normalize(n1, sing) == n1);
    }
  }
}

TEST_CASE("dual is an involution, fixing Delta and Borel") {
  CHECK(dual(pcls("Sigma(0,2,k+)")) == pcls("Pi(0,2,k+)"));
  CHECK(dual(pcls("Delta(0,3,k+)")) == pcls("Delta(0,3,k+)"));
  CHECK(dual(dual(pcls("Sigma(0,w,k+)"))) == pcls("Sigma(0,w,k+)"));
  CHECK(dual(pcls("Borel(k+)")) == pcls("Borel(k+)"));
}

TEST_CASE("normalize commutes with dual on even fine levels") {
  Situation sing = singular_ctx();
  for (const auto& l : {"1", "3", "5", "w", "w+2", "L(cofk)+2"}) {
    Pointclass p{Kind::Sigma, ord::parse_ordinal(l), Base::kappa};
    CHECK(normalize(dual(p), sing) == dual(normalize(p, sing)));
  }
  // odd fine levels normalize to Delta no matter the kind
  for (const auto& l : {"2", "4", "w+1", "L(cofk)+1"}) {
    Pointclass s{Kind::Sigma, ord::parse_ordinal(l), Base::kappa};
    Pointclass q{Kind::Pi, ord::parse_ordinal(l), Base::kappa};
    CHECK(normalize(s, sing) == normalize(q, sing));
    CHECK(normalize(s, sing).kind == Kind::Delta);
  }
}

TEST_CASE("compare: inclusion ladder") {
  Situation reg = regular_ctx({SpaceFlag::regular_hausdorff_weight_le_kappa});
  CHECK(compare(pcls("Sigma(0,1,k+)"), pcls("Sigma(0,2,k+)"), reg).answer == Answer::holds);
  CHECK(compare(pcls("Delta(0,4,k+)"), pcls("Sigma(0,4,k+)"), reg).answer == Answer::holds);
  CHECK(compare(pcls("Sigma(0,2,k+)"), pcls("Pi(0,3,k+)"), reg).answer == Answer::holds);
  CHECK(compare(pcls("Sigma(0,1,k+)"), pcls("Sigma(0,3,k+)"), regular_ctx()).answer ==
        Answer::holds);  // level 1 to 3 needs no flag
  CHECK(compare(pcls("Sigma(0,2,k+)"), pcls("Delta(0,3,k+)"), reg).answer == Answer::holds);
  CHECK(compare(pcls("Sigma(0,3,k+)"), pcls("Borel(k+)"), reg).answer == Answer::holds);

  // level 1 into level 2 requires the weight/regularity flag
  CHECK(compare(pcls("Sigma(0,1,k+)"), pcls("Sigma(0,2,k+)"), regular_ctx()).answer ==
        Answer::unknown);

  // self-duality is undecided without order facts
  CHECK(compare(pcls("Sigma(0,3,k+)"), pcls("Pi(0,3,k+)"), reg).answer == Answer::unknown);
}

TEST_CASE("compare: properness failures under order facts") {
  Situation reg = regular_ctx({SpaceFlag::regular_hausdorff_weight_le_kappa});
  reg.facts.push_back(gt_fact("3"));
  CHECK(compare(pcls("Sigma(0,3,k+)"), pcls("Delta(0,3,k+)"), reg).answer == Answer::fails);
  CHECK(compare(pcls("Sigma(0,3,k+)"), pcls("Pi(0,3,k+)"), reg).answer == Answer::fails);
  CHECK(compare(pcls("Sigma(0,3,k+)"), pcls("Sigma(0,2,k+)"), reg).answer == Answer::fails);
  // facts about higher levels say nothing about lower ones
  CHECK(compare(pcls("Sigma(0,2,k+)"), pcls("Delta(0,2,k+)"), reg).answer == Answer::fails);
  Situation weak = regular_ctx({SpaceFlag::regular_hausdorff_weight_le_kappa});
  weak.facts.push_back(gt_fact("2"));
  CHECK(compare(pcls("Sigma(0,3,k+)"), pcls("Delta(0,3,k+)"), weak).answer == Answer::unknown);
}

TEST_CASE("compare: collapse facts swallow inclusions") {
  Situation reg = regular_ctx({SpaceFlag::regular_hausdorff_weight_le_kappa});
  reg.facts.push_back(pc::OrderFact{Rel::le, ord::parse_ordinal("2"), Base::kappa_plus});
  CHECK(compare(pcls("Sigma(0,5,k+)"), pcls("Pi(0,2,k+)"), reg).answer == Answer::holds);
  CHECK(compare(pcls("Borel(k+)"), pcls("Sigma(0,2,k+)"), reg).answer == Answer::holds);
}

TEST_CASE("compare: fine odd classes sit between coarse levels") {
  Situation sing = singular_ctx({SpaceFlag::subspace_of_cantor});
  // Sigma(0,2,k) is the self-dual fine class between coarse levels 1 and 2
  CHECK(compare(pcls("Sigma(0,2,k)"), pcls("Delta(0,2,k+)"), sing).answer == Answer::holds);
  CHECK(compare(pcls("Sigma(0,1,k+)"), pcls("Sigma(0,2,k)"), sing).answer == Answer::holds);
  CHECK(compare(pcls("Pi(0,1,k+)"), pcls("Sigma(0,2,k)"), sing).answer == Answer::holds);
  CHECK(compare(pcls("Sigma(0,2,k)"), pcls("Pi(0,2,k)"), sing).answer == Answer::holds);
  CHECK(compare(pcls("Sigma(0,2,k)"), pcls("Sigma(0,4,k)"), sing).answer == Answer::holds);
  // a fine properness fact refutes the downward inclusion
  Situation with_fact = sing;
  with_fact.facts.push_back(gt_fact("4", Base::kappa));
  CHECK(compare(pcls("Sigma(0,4,k)"), pcls("Sigma(0,2,k)"), with_fact).answer == Answer::fails);
  // without the clopen flag the fine base cannot be interpreted
  CHECK(compare(pcls("Sigma(0,2,k)"), pcls("Pi(0,2,k)"), singular_ctx({})).answer ==
        Answer::unknown);
}

TEST_CASE("closure: coarse table") {
  Situation reg = regular_ctx({SpaceFlag::regular_hausdorff_weight_le_kappa});
  // successor level: the parameter is cof(kappa)
  CHECK(closure(pcls("Sigma(0,w+1,k+)"), SetOp::intersection, parse_size("<cofk"), reg).answer ==
        Answer::holds);
  CHECK(closure(pcls("Sigma(0,2,k+)"), SetOp::union_, parse_size("kappa"), reg).answer ==
        Answer::holds);
  CHECK(closure(pcls("Pi(0,2,k+)"), SetOp::intersection, parse_size("kappa"), reg).answer ==
        Answer::holds);
  CHECK(closure(pcls("Delta(0,3,k+)"), SetOp::complement, std::nullopt, reg).answer ==
        Answer::holds);
  CHECK(closure(pcls("Borel(k+)"), SetOp::union_, parse_size("kappa"), reg).answer ==
        Answer::holds);

  // optimality needs an order fact
  CHECK(closure(pcls("Pi(0,2,k+)"), SetOp::complement, std::nullopt, reg).answer ==
        Answer::unknown);
  Situation facts = reg;
  facts.facts.push_back(gt_fact("2"));
  CHECK(closure(pcls("Pi(0,2,k+)"), SetOp::complement, std::nullopt, facts).answer ==
        Answer::fails);
  CHECK(closure(pcls("Sigma(0,2,k+)"), SetOp::intersection, parse_size("kappa"), facts).answer ==
        Answer::fails);

  Situation limit_fact = reg;
  limit_fact.facts.push_back(gt_fact("w"));
  CHECK(closure(pcls("Delta(0,w,k+)"), SetOp::union_, parse_size("omega"), limit_fact).answer ==
        Answer::fails);
  CHECK(closure(pcls("Delta(0,w,k+)"), SetOp::union_, parse_size("<omega"), limit_fact).answer ==
        Answer::holds);
}

TEST_CASE("closure: level one is the additivity of the space") {
  Situation reg = regular_ctx({SpaceFlag::regular_hausdorff_weight_le_kappa});
  CHECK(closure(pcls("Sigma(0,1,k+)"), SetOp::intersection, parse_size("<cofk"), reg).answer ==
        Answer::unknown);
  Situation add = regular_ctx(
      {SpaceFlag::regular_hausdorff_weight_le_kappa, SpaceFlag::cofk_additive});
  CHECK(closure(pcls("Sigma(0,1,k+)"), SetOp::intersection, parse_size("<cofk"), add).answer ==
        Answer::holds);
  // the Delta level-1 negative needs the space inside the Cantor space
  Situation f1 = regular_ctx({SpaceFlag::regular_hausdorff_weight_le_kappa});
  f1.facts.push_back(gt_fact("1"));
  CHECK(closure(pcls("Delta(0,1,k+)"), SetOp::union_, parse_size("kappa"), f1).answer ==
        Answer::unknown);
  Situation f2 = regular_ctx({SpaceFlag::subspace_of_cantor});
  f2.facts.push_back(gt_fact("1"));
  CHECK(closure(pcls("Delta(0,1,k+)"), SetOp::union_, parse_size("kappa"), f2).answer ==
        Answer::fails);
}

TEST_CASE("closure: fine base") {
  Situation sing = singular_ctx();
  // odd fine levels are small self-dual algebras
  CHECK(closure(pcls("Sigma(0,2,k)"), SetOp::complement, std::nullopt, sing).answer ==
        Answer::holds);
  CHECK(closure(pcls("Pi(0,2,k)"), SetOp::union_, parse_size("<cofk"), sing).answer ==
        Answer::holds);
  Situation with_fact = sing;
  with_fact.facts.push_back(gt_fact("2", Base::kappa));
  CHECK(closure(pcls("Sigma(0,2,k)"), SetOp::union_, parse_size("cofk"), with_fact).answer ==
        Answer::fails);
  // even fine levels ride the coarse table
  CHECK(closure(pcls("Sigma(0,3,k)"), SetOp::union_, parse_size("kappa"), sing).answer ==
        Answer::holds);
}

TEST_CASE("translate_order") {
  Situation sing = singular_ctx();
  pc::OrderFact f{Rel::le, ord::parse_ordinal("3"), Base::kappa_plus};
  pc::OrderFact t = translate_order(f, sing);
  CHECK(t.base == Base::kappa);
  CHECK(t.rel == Rel::le);
  CHECK(t.bound == ord::parse_ordinal("5"));

  pc::OrderFact lim{Rel::le, ord::parse_ordinal("w"), Base::kappa_plus};
  CHECK(translate_order(lim, sing).bound == ord::parse_ordinal("w"));

  pc::OrderFact one{Rel::le, ord::parse_ordinal("1"), Base::kappa};
  pc::OrderFact up = translate_order(one, sing);
  CHECK(up.base == Base::kappa_plus);
  CHECK(up.bound == ord::parse_ordinal("1"));

  CHECK_THROWS_AS(translate_order(f, regular_ctx()), MissingAssumption);

  // round-trip on le-facts
  for (const char* b : {"1", "2", "3", "7", "w", "w+1", "w+4", "w*2+2", "L(cofk)+3"}) {
    pc::OrderFact x{Rel::le, ord::parse_ordinal(b), Base::kappa_plus};
    pc::OrderFact down = translate_order(x, sing);
    pc::OrderFact back = translate_order(down, sing);
    CHECK(back.base == Base::kappa_plus);
    CHECK(back.bound == x.bound);
  }
}

TEST_CASE("collapse criteria") {
  Situation reg = regular_ctx({SpaceFlag::regular_hausdorff_weight_le_kappa});
  std::vector<Evidence> ev = {ClassEq{pcls("Sigma(0,3,k+)"), pcls("Pi(0,3,k+)")}};
  CHECK(collapse_criteria(ev, ord::parse_ordinal("3"), Base::kappa_plus, reg).answer ==
        Answer::holds);
  CHECK(collapse_criteria(ev, ord::parse_ordinal("5"), Base::kappa_plus, reg).answer ==
        Answer::holds);
  CHECK(collapse_criteria(ev, ord::parse_ordinal("2"), Base::kappa_plus, reg).answer ==
        Answer::unknown);

  // odd fine self-duality is unconditional, so it witnesses nothing
  Situation sing = singular_ctx();
  std::vector<Evidence> odd = {ClassEq{pcls("Sigma(0,2,k)"), pcls("Pi(0,2,k)")}};
  CHECK(collapse_criteria(odd, ord::parse_ordinal("2"), Base::kappa, sing).answer ==
        Answer::unknown);
  std::vector<Evidence> even = {ClassEq{pcls("Sigma(0,3,k)"), pcls("Pi(0,3,k)")}};
  CHECK(collapse_criteria(even, ord::parse_ordinal("3"), Base::kappa, sing).answer ==
        Answer::holds);

  // closure evidence
  std::vector<Evidence> clos = {
      ClosureFact{pcls("Sigma(0,4,k+)"), SetOp::intersection, parse_size("kappa")}};
  CHECK(collapse_criteria(clos, ord::parse_ordinal("4"), Base::kappa_plus, reg).answer ==
        Answer::holds);

  CHECK(collapse_criteria({}, ord::parse_ordinal("3"), Base::kappa_plus, reg).answer ==
        Answer::unknown);

  // order facts refute
  Situation f = reg;
  f.facts.push_back(gt_fact("3"));
  CHECK(collapse_criteria({}, ord::parse_ordinal("3"), Base::kappa_plus, f).answer ==
        Answer::fails);
}

TEST_CASE("universal sets") {
  Situation reg = regular_ctx();
  CHECK(universal_exists(pcls("Sigma(0,4,k+)"), reg).answer == Answer::holds);
  CHECK(universal_exists(pcls("Delta(0,3,k+)"), reg).answer == Answer::fails);
  CHECK(universal_exists(pcls("Borel(k+)"), reg).answer == Answer::fails);
  Situation sing = singular_ctx();
  CHECK(universal_exists(pcls("Sigma(0,2,k)"), sing).answer == Answer::fails);  // odd index
  CHECK(universal_exists(pcls("Sigma(0,3,k)"), sing).answer == Answer::holds);  // even index
  CHECK(universal_exists(pcls("Delta(0,3,k)"), sing).answer == Answer::fails);
  CHECK(universal_exists(pcls("Sigma(0,2,k)"), singular_ctx({})).answer == Answer::unknown);
}

TEST_CASE("function hierarchy order") {
  pc::OrderFact f{Rel::eq, ord::parse_ordinal("5"), Base::kappa_plus};
  pc::OrderFact g = function_hierarchy_order(f, true, true);
  CHECK(g.bound == f.bound);
  CHECK(g.rel == f.rel);
  pc::OrderFact le{Rel::le, ord::parse_ordinal("2"), Base::kappa_plus};
  CHECK(function_hierarchy_order(le, true, true).bound == le.bound);
  CHECK_THROWS_AS(function_hierarchy_order(f, false, true), MissingAssumption);
  CHECK_THROWS_AS(function_hierarchy_order(f, true, false), MissingAssumption);
}

TEST_CASE("verdict traces are audited against the rule table") {
  Situation reg = regular_ctx({SpaceFlag::regular_hausdorff_weight_le_kappa});
  Verdict v = compare(pcls("Sigma(0,1,k+)"), pcls("Sigma(0,2,k+)"), reg);
  CHECK(v.answer == Answer::holds);
  CHECK(!v.trace.empty());
  CHECK(audit(v));
  Verdict tampered = v;
  tampered.trace[0].statement = "something else";
  CHECK(!audit(tampered));
  // every rule id in the table is unique
  for (const auto& r : rule_table()) {
    CHECK(find_rule(r.id) == &r);
  }
}

TEST_CASE("consistency: kappa-sized intersection closure never co-holds with properness") {
  // closure of an additive class under intersections of size kappa would
  // collapse the hierarchy, so the engine must never answer holds for it
  for (auto mk : {&regular_ctx}) {
    Situation s = mk({SpaceFlag::regular_hausdorff_weight_le_kappa});
    s.facts.push_back(gt_fact("4"));
    Verdict v = closure(pcls("Sigma(0,4,k+)"), SetOp::intersection, parse_size("kappa"), s);
    CHECK(v.answer != Answer::holds);
  }
}
