#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "gbh/treemap.hpp"

using namespace gbh;
using namespace gbh::tree;

namespace {

TreeMap identity_map(const FiniteTree& t) {
  TreeMap m;
  m.source = t;
  m.target = t;
  for (const auto& n : t.nodes) m.phi[n] = n;
  return m;
}

}  // namespace

TEST_CASE("order property flags") {
  FiniteTree t2 = FiniteTree::full(Alphabet{2, 0}, 2);
  auto id = identity_map(t2);
  OrderProps p = check_order_props(id);
  CHECK(p.order_preserving);
  CHECK(p.strict);
  CHECK(p.preserves_incompatibility);
  CHECK(p.order_embedding);

  // constant map to the root: order preserving but not strict
  TreeMap c;
  c.source = t2;
  c.target = t2;
  for (const auto& n : t2.nodes) c.phi[n] = {};
  OrderProps pc = check_order_props(c);
  CHECK(pc.order_preserving);
  CHECK(!pc.strict);

  // comparable images of incomparable nodes
  TreeMap bad;
  bad.source = FiniteTree::full(Alphabet{2, 0}, 1);
  bad.target = t2;
  bad.phi[{}] = {};
  bad.phi[{0}] = {0};
  bad.phi[{1}] = {0, 0};
  OrderProps pb = check_order_props(bad);
  CHECK(pb.strict);
  CHECK(!pb.preserves_incompatibility);
  CHECK(!pb.order_embedding);
}

TEST_CASE("projection of product trees") {
  Alphabet prod{3, 2};
  CHECK(pi_letter(prod, 0) == 0);
  CHECK(pi_letter(prod, 1) == 0);
  CHECK(pi_letter(prod, 2) == 1);
  CHECK(pi_letter(prod, 5) == 2);
  FiniteTree t = FiniteTree::full(prod, 1);
  FiniteTree p = pi_tree(t);
  CHECK(p.alph.first == 3);
  CHECK(!p.alph.is_product());
  CHECK(p.nodes.size() == 4);  // root plus three letters
}

TEST_CASE("projection-respecting embedding characterizations") {
  FiniteTree src = FiniteTree::full(Alphabet{2, 0}, 1);
  FiniteTree tgt = FiniteTree::full(Alphabet{3, 2}, 2);

  // an injective first-coordinate copy
  TreeMap good;
  good.source = src;
  good.target = tgt;
  good.phi[{}] = {};
  good.phi[{0}] = {0};   // letter (0,0)
  good.phi[{1}] = {2};   // letter (1,0)
  auto rg = check_exists_perfect(good);
  CHECK(rg.value);

  // collapsing both source letters onto one first coordinate
  TreeMap collapsing;
  collapsing.source = src;
  collapsing.target = tgt;
  collapsing.phi[{}] = {};
  collapsing.phi[{0}] = {0};  // (0,0)
  collapsing.phi[{1}] = {1};  // (0,1): same first coordinate
  auto rc = check_exists_perfect(collapsing);
  CHECK(!rc.value);

  // a non order preserving map is rejected
  TreeMap rogue;
  rogue.source = src;
  rogue.target = tgt;
  rogue.phi[{}] = {0};
  rogue.phi[{0}] = {2};
  rogue.phi[{1}] = {4};
  CHECK_THROWS_AS(check_exists_perfect(rogue), Error);
}

TEST_CASE("characterizations agree over an exhaustive small corpus") {
  FiniteTree src = FiniteTree::full(Alphabet{2, 0}, 1);
  FiniteTree tgt = FiniteTree::full(Alphabet{2, 2}, 1);
  // all maps of the 3 source nodes into the 5 target nodes
  std::size_t total = 0, order_preserving = 0;
  for (std::size_t a = 0; a < tgt.nodes.size(); ++a) {
    for (std::size_t b = 0; b < tgt.nodes.size(); ++b) {
      for (std::size_t c = 0; c < tgt.nodes.size(); ++c) {
        TreeMap m;
        m.source = src;
        m.target = tgt;
        m.phi[{}] = tgt.nodes[a];
        m.phi[{0}] = tgt.nodes[b];
        m.phi[{1}] = tgt.nodes[c];
        ++total;
        if (!check_order_props(m).order_preserving) continue;
        ++order_preserving;
        CHECK_NOTHROW(check_exists_perfect(m));  // mismatch would throw
      }
    }
  }
  CHECK(total == 125);
  CHECK(order_preserving > 0);
}

TEST_CASE("branch maps") {
  FiniteTree t1 = FiniteTree::full(Alphabet{2, 0}, 1);
  FiniteTree t2 = FiniteTree::full(Alphabet{2, 0}, 2);

  auto id = identity_map(t2);
  auto f = body_map(id);
  for (const auto& x : t2.branches()) CHECK(f.at(x) == x);

  // the doubling map s -> s s
  TreeMap dbl;
  dbl.source = t1;
  dbl.target = t2;
  dbl.phi[{}] = {};
  dbl.phi[{0}] = {0, 0};
  dbl.phi[{1}] = {1, 1};
  auto fd = body_map(dbl);
  CHECK(fd.at({0}) == Node{0, 0});
  CHECK(fd.at({1}) == Node{1, 1});

  // an incompatibility-preserving map has an injective branch map
  std::set<Node> images;
  for (const auto& [x, fx] : fd) {
    (void)x;
    CHECK(images.insert(fx).second);
  }

  // not strict -> NotStrict
  TreeMap c;
  c.source = t1;
  c.target = t2;
  for (const auto& n : t1.nodes) c.phi[n] = {};
  CHECK_THROWS_AS(body_map(c), Error);

  // images that stop short -> DepthShortfall
  TreeMap shallow;
  shallow.source = t1;
  shallow.target = t2;
  shallow.phi[{}] = {};
  shallow.phi[{0}] = {0};
  shallow.phi[{1}] = {1};
  CHECK_THROWS_AS(body_map(shallow), Error);
}

TEST_CASE("branch map of a composition with the projection") {
  FiniteTree src = FiniteTree::full(Alphabet{2, 0}, 1);
  FiniteTree tgt = FiniteTree::full(Alphabet{3, 2}, 1);
  TreeMap m;
  m.source = src;
  m.target = tgt;
  m.phi[{}] = {};
  m.phi[{0}] = {1};  // (0,1)
  m.phi[{1}] = {4};  // (2,0)
  auto f = body_map(m);
  TreeMap composed;
  composed.source = src;
  composed.target = pi_tree(tgt);
  for (const auto& [s, fs] : m.phi) composed.phi[s] = pi_node(tgt.alph, fs);
  auto g = body_map(composed);
  for (const auto& x : src.branches()) {
    CHECK(g.at(x) == pi_node(tgt.alph, f.at(x)));
  }
}

TEST_CASE("branch map injectivity matches incompatibility preservation over the corpus") {
  FiniteTree src = FiniteTree::full(Alphabet{2, 0}, 1);
  FiniteTree tgt = FiniteTree::full(Alphabet{2, 2}, 1);
  for (const auto& r : tgt.nodes) {
    for (const auto& u : tgt.nodes) {
      for (const auto& v : tgt.nodes) {
        TreeMap m;
        m.source = src;
        m.target = tgt;
        m.phi[{}] = r;
        m.phi[{0}] = u;
        m.phi[{1}] = v;
        OrderProps p = check_order_props(m);
        if (!p.strict || u.size() != 1 || v.size() != 1) continue;  // body map undefined
        auto f = body_map(m);
        std::set<Node> images;
        bool injective = true;
        for (const auto& [x, fx] : f) {
          (void)x;
          injective = injective && images.insert(fx).second;
        }
        CHECK(injective == p.preserves_incompatibility);
      }
    }
  }
}

TEST_CASE("closed images") {
  FiniteTree t1 = FiniteTree::full(Alphabet{2, 0}, 1);
  FiniteTree t2 = FiniteTree::full(Alphabet{2, 0}, 2);
  FiniteTree t3 = FiniteTree::full(Alphabet{3, 0}, 2);

  CHECK(closed_image_check(identity_map(t2)));

  TreeMap dbl;
  dbl.source = t1;
  dbl.target = t2;
  dbl.phi[{}] = {};
  dbl.phi[{0}] = {0, 0};
  dbl.phi[{1}] = {1, 1};
  CHECK(closed_image_check(dbl));

  // every order embedding of the 2-branching depth-1 tree into the
  // 3-branching depth-2 tree with full-depth leaf images
  std::size_t embeddings = 0;
  for (const auto& r : t3.nodes) {
    for (const auto& u : t3.nodes) {
      for (const auto& v : t3.nodes) {
        TreeMap m;
        m.source = t1;
        m.target = t3;
        m.phi[{}] = r;
        m.phi[{0}] = u;
        m.phi[{1}] = v;
        OrderProps p = check_order_props(m);
        if (!p.order_embedding) continue;
        if (u.size() != 2 || v.size() != 2) continue;  // body map must reach depth 2
        ++embeddings;
        CHECK(closed_image_check(m));
      }
    }
  }
  CHECK(embeddings > 0);

  TreeMap not_embedding;
  not_embedding.source = t1;
  not_embedding.target = t2;
  for (const auto& n : t1.nodes) not_embedding.phi[n] = {};
  CHECK_THROWS_AS(closed_image_check(not_embedding), Error);
}
