#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gbh/forcing.hpp"

using namespace gbh;
using namespace gbh::forcing;
using space::FiniteSpace;
using space::PointSet;
using space::SpacePtr;

namespace {

struct Lab {
  Template tmpl;
  SpacePtr sp;
  Params params;
};

Lab tiny(std::size_t s_max = 2, std::vector<std::string> A = {}, std::vector<std::string> B = {},
         std::vector<std::string> pts = {"00", "11"}) {
  Lab l;
  l.tmpl = Template{2, 3};
  l.sp = FiniteSpace::make(3, 2, pts);
  l.params = Params{l.sp, PointSet(l.sp, A), PointSet(l.sp, B), s_max};
  return l;
}

}  // namespace

TEST_CASE("template geometry") {
  Template t{2, 3};
  CHECK(t.internal_nodes().size() == 4);  // root plus three children
  CHECK(t.leaves().size() == 9);
  CHECK(t.rank("") == 2);
  CHECK(t.rank("0") == 1);
  CHECK(t.rank("00") == 0);
  CHECK(t.successors("0") == std::vector<std::string>{"00", "01", "02"});
}

TEST_CASE("condition validity") {
  Lab l = tiny();
  CHECK(is_condition(Condition{}, l.tmpl, l.params));

  // clause c: a promise and a sub-promise for the same point
  Condition c1;
  c1.R = {{"", "00"}, {"0", "00"}};
  auto v1 = check_condition(c1, l.tmpl, l.params);
  REQUIRE(v1);
  CHECK(v1->clause == "c");

  // clause c: a promise against a capturing leaf label
  Condition c2;
  c2.R = {{"0", "00"}};
  c2.f = {{"01", "0"}};
  auto v2 = check_condition(c2, l.tmpl, l.params);
  REQUIRE(v2);
  CHECK(v2->clause == "c");

  // clause e: a root promise for a point of B
  Lab lb = tiny(2, {}, {"11"});
  Condition c3;
  c3.R = {{"", "11"}};
  auto v3 = check_condition(c3, lb.tmpl, lb.params);
  REQUIRE(v3);
  CHECK(v3->clause == "e");

  // clause d: a child-of-root promise for a point of A
  Lab la = tiny(2, {"00"});
  Condition c4;
  c4.R = {{"1", "00"}};
  auto v4 = check_condition(c4, la.tmpl, la.params);
  REQUIRE(v4);
  CHECK(v4->clause == "d");

  // budget
  Condition c5;
  c5.f = {{"00", "0"}, {"01", "1"}, {"02", "2"}};
  auto v5 = check_condition(c5, l.tmpl, l.params);
  REQUIRE(v5);
  CHECK(v5->clause == "budget");
}

TEST_CASE("ordering and meets") {
  Lab l = tiny();
  Condition one;  // the empty condition is the top
  Condition p;
  p.R = {{"0", "00"}};
  CHECK(leq(p, one));
  CHECK(leq(p, p));
  Condition q = p;
  q.R.insert({"1", "11"});
  CHECK(leq(q, p));
  CHECK(!leq(p, q));

  // meet with the top is the condition itself
  auto m0 = meet(p, one, l.tmpl, l.params);
  REQUIRE(m0.status == MeetResult::met);
  CHECK(*m0.value == p);

  // disjoint support: the union, and it is the greatest lower bound
  Condition a, b;
  a.f = {{"00", "11"}};
  b.R = {{"1", "00"}};
  auto m1 = meet(a, b, l.tmpl, l.params);
  REQUIRE(m1.status == MeetResult::met);
  for (const auto& r : enumerate_poset(l.tmpl, l.params)) {
    if (leq(r, a) && leq(r, b)) CHECK(leq(r, *m1.value));
  }

  // a logical clash
  Condition c, d;
  c.R = {{"0", "00"}};
  d.R = {{"00", "00"}};  // not internal -> invalid on its own
  d.R = {{"", "00"}, {"0", "00"}};
  Condition e;
  e.R = {{"", "00"}};
  Condition f;
  f.R = {{"0", "00"}};
  auto m2 = meet(e, f, l.tmpl, l.params);
  CHECK(m2.status == MeetResult::incompatible);

  // over budget but coherent
  Condition g, h;
  g.f = {{"00", "0"}, {"01", "1"}};
  h.R = {{"1", "11"}};
  auto m3 = meet(g, h, l.tmpl, l.params);
  CHECK(m3.status == MeetResult::budget_exceeded);
}

TEST_CASE("partial order laws on the enumerated poset") {
  Lab l = tiny(2);
  auto poset = enumerate_poset(l.tmpl, l.params);
  CHECK(poset.size() > 100);
  for (const auto& p : poset) CHECK(is_condition(p, l.tmpl, l.params));
  // antisymmetry on a sample
  for (std::size_t i = 0; i < poset.size(); i += 7) {
    for (std::size_t j = 0; j < poset.size(); j += 11) {
      if (leq(poset[i], poset[j]) && leq(poset[j], poset[i])) CHECK(poset[i] == poset[j]);
    }
  }
}

TEST_CASE("density membership and extensions") {
  Lab l = tiny();
  Condition p;
  p.R = {{"0", "00"}};
  CHECK(in_density_set(p, l.tmpl, "0", "00"));

  Condition q;
  q.f = {{"00", "00"}};
  CHECK(in_density_set(q, l.tmpl, "0", "00"));  // rank-1 witness via the leaf

  Condition r;
  r.R = {{"0", "00"}};
  CHECK(in_density_set(r, l.tmpl, "", "00"));  // rank-2 witness via the successor

  CHECK(!in_density_set(Condition{}, l.tmpl, "0", "00"));

  // the A-point at the root gets its promise directly
  Lab la = tiny(2, {"00"});
  auto ext = find_density_extension(Condition{}, la.tmpl, la.params, "", "00");
  REQUIRE(ext);
  CHECK(ext->R.count({"", "00"}));
}

TEST_CASE("every density set is dense over the bounded poset") {
  Lab l = tiny(2);
  auto poset = enumerate_poset(l.tmpl, l.params);
  for (const auto& p : poset) {
    for (const auto& t : l.tmpl.internal_nodes()) {
      for (const auto& x : l.sp->points()) {
        auto q = find_density_extension(p, l.tmpl, l.params, t, x);
        REQUIRE_MESSAGE(q.has_value(), "no extension for t=", t, " x=", x);
        CHECK(leq(*q, p));
        CHECK(in_density_set(*q, l.tmpl, t, x));
      }
    }
  }
}

TEST_CASE("generic runs decide the whole template") {
  Lab l = tiny(40, {"00"}, {"11"}, {"00", "11", "22"});
  std::vector<DenseSpec> dense = standard_dense_list(l.tmpl, l.sp);

  for (unsigned seed : {1u, 2u, 3u}) {
    FilterState st = build_generic(l.tmpl, l.params, dense, seed);
    const Condition& G = st.accumulated;
    // chain is decreasing
    for (std::size_t i = 1; i < st.chain.size(); ++i) CHECK(leq(st.chain[i], st.chain[i - 1]));
    // promises match the interpretation at every internal node
    for (const auto& t : l.tmpl.internal_nodes()) {
      PointSet Gt = interpret_generic(G.f, t, l.tmpl, l.sp);
      for (const auto& x : l.sp->points()) {
        CHECK(Gt.contains(x) == (G.R.count({t, x}) > 0));
      }
    }
    // separation at the root
    PointSet root = interpret_generic(G.f, "", l.tmpl, l.sp);
    CHECK(l.params.A.subset_of(root));
    CHECK(root.intersect(l.params.B).empty());
  }
}

TEST_CASE("empty dense list leaves the top condition") {
  Lab l = tiny();
  FilterState st = build_generic(l.tmpl, l.params, {}, 9);
  CHECK(st.accumulated == Condition{});
}

TEST_CASE("interpret_generic needs total labels") {
  Lab l = tiny();
  std::map<std::string, std::string> partial = {{"00", "0"}};
  CHECK_THROWS_AS(interpret_generic(partial, "0", l.tmpl, l.sp), Error);
}

TEST_CASE("crank") {
  Lab l = tiny();
  PointSet H(l.sp, std::vector<std::string>{"00"});
  CHECK(crank(Condition{}, H, l.tmpl) == 0);
  Condition p;
  p.R = {{"", "11"}};
  CHECK(crank(p, H, l.tmpl) == 2);
  Condition q;
  q.R = {{"", "00"}};
  CHECK(crank(q, H, l.tmpl) == 0);
  Condition r;
  r.R = {{"0", "11"}};
  CHECK(crank(r, H, l.tmpl) == 1);

  // the crank of a meet is the max of the cranks
  Condition a, b;
  a.R = {{"0", "11"}};
  b.R = {{"1", "00"}};
  auto m = meet(a, b, l.tmpl, l.params);
  REQUIRE(m.status == MeetResult::met);
  CHECK(crank(*m.value, H, l.tmpl) == std::max(crank(a, H, l.tmpl), crank(b, H, l.tmpl)));
}

TEST_CASE("restriction") {
  Lab l = tiny();
  PointSet H(l.sp, std::vector<std::string>{"00"});
  PointSet all(l.sp, true);
  Condition p;
  p.f = {{"00", "0"}};  // the stem must avoid the promised point at "0"
  p.R = {{"0", "11"}};

  CHECK(restrict_condition(p, all, 0, l.tmpl, l.params) == p);
  Condition dropped = restrict_condition(p, PointSet(l.sp), 0, l.tmpl, l.params);
  CHECK(dropped.f == p.f);
  CHECK(dropped.R.empty());
  CHECK(restrict_condition(p, PointSet(l.sp), l.tmpl.alpha, l.tmpl, l.params) == p);
  Condition kept = restrict_condition(p, H, 1, l.tmpl, l.params);
  CHECK(kept == p);  // rank 1 promise survives the cutoff
}

TEST_CASE("projection law on the bounded poset") {
  Lab l = tiny(2);
  auto poset = enumerate_poset(l.tmpl, l.params);
  PointSet H(l.sp, std::vector<std::string>{"00"});
  std::size_t step = poset.size() / 60 + 1;
  for (std::size_t i = 0; i < poset.size(); i += step) {
    CHECK(projection_check(poset[i], H, 1, l.tmpl, l.params, poset));
  }
  CHECK_THROWS_AS(projection_check(poset[0], H, 0, l.tmpl, l.params, poset), Error);
  CHECK_THROWS_AS(projection_check(poset[0], H, 2, l.tmpl, l.params, poset), Error);
}

TEST_CASE("linked reduction") {
  Lab l = tiny();
  Condition p;
  CHECK(linked_reduction(p, l.tmpl).g.empty());

  Condition a, b;
  a.R = {{"0", "00"}};
  a.f = {{"10", "1"}};
  b.R = {{"0", "00"}};
  b.f = {{"10", "1"}};
  auto ra = linked_reduction(a, l.tmpl);
  auto rb = linked_reduction(b, l.tmpl);
  CHECK(reductions_agree(ra, rb));
  CHECK(compatible(a, b, l.tmpl, l.params));

  // the encoding separates different promise sets
  Condition c;
  c.R = {{"1", "00"}};
  CHECK(!reductions_agree(ra, linked_reduction(c, l.tmpl)));
}
