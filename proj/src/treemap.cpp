#include "gbh/treemap.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace gbh::tree {

FiniteTree FiniteTree::full(Alphabet a, int depth) {
  FiniteTree t;
  t.alph = a;
  t.depth = depth;
  Node cur;
  std::function<void()> rec = [&]() {
    t.nodes.push_back(cur);
    if (static_cast<int>(cur.size()) == depth) return;
    for (int l = 0; l < a.size(); ++l) {
      cur.push_back(l);
      rec();
      cur.pop_back();
    }
  };
  rec();
  std::sort(t.nodes.begin(), t.nodes.end());
  return t;
}

bool FiniteTree::contains(const Node& n) const {
  return std::binary_search(nodes.begin(), nodes.end(), n);
}

std::vector<Node> FiniteTree::branches() const {
  std::vector<Node> r;
  for (const auto& n : nodes) {
    if (static_cast<int>(n.size()) == depth) r.push_back(n);
  }
  return r;
}

void validate(const FiniteTree& t) {
  if (t.nodes.empty() || !t.nodes.front().empty())
    fail("SchemaError", "a tree contains the empty sequence");
  if (!std::is_sorted(t.nodes.begin(), t.nodes.end()))
    fail("SchemaError", "tree nodes must be sorted");
  for (const auto& n : t.nodes) {
    if (static_cast<int>(n.size()) > t.depth) fail("SchemaError", "node longer than the depth");
    for (int l : n) {
      if (l < 0 || l >= t.alph.size()) fail("SchemaError", "letter outside the alphabet");
    }
    if (!n.empty()) {
      Node parent(n.begin(), n.end() - 1);
      if (!t.contains(parent)) fail("SchemaError", "tree is not prefix-closed");
    }
  }
}

int pi_letter(const Alphabet& a, int letter) {
  if (!a.is_product()) fail("SchemaError", "projection needs a product alphabet");
  return letter / a.second;
}

Node pi_node(const Alphabet& a, const Node& n) {
  Node r;
  r.reserve(n.size());
  for (int l : n) r.push_back(pi_letter(a, l));
  return r;
}

FiniteTree pi_tree(const FiniteTree& t) {
  FiniteTree r;
  r.alph = Alphabet{t.alph.first, 0};
  r.depth = t.depth;
  std::set<Node> seen;
  for (const auto& n : t.nodes) seen.insert(pi_node(t.alph, n));
  r.nodes.assign(seen.begin(), seen.end());
  return r;
}

bool is_prefix(const Node& a, const Node& b) {
  if (a.size() > b.size()) return false;
  return std::equal(a.begin(), a.end(), b.begin());
}

bool is_strict_prefix(const Node& a, const Node& b) { return a.size() < b.size() && is_prefix(a, b); }

bool incompatible(const Node& a, const Node& b) { return !is_prefix(a, b) && !is_prefix(b, a); }

void validate(const TreeMap& m) {
  validate(m.source);
  validate(m.target);
  for (const auto& n : m.source.nodes) {
    auto it = m.phi.find(n);
    if (it == m.phi.end()) fail("SchemaError", "the map misses a source node");
    if (!m.target.contains(it->second))
      fail("SchemaError", "an image is not a node of the target tree");
  }
  if (m.phi.size() != m.source.nodes.size())
    fail("SchemaError", "the map mentions nodes outside the source tree");
}

OrderProps check_order_props(const TreeMap& m) {
  validate(m);
  OrderProps p;
  p.order_preserving = true;
  p.strict = true;
  p.preserves_incompatibility = true;
  for (const auto& [s, fs] : m.phi) {
    for (const auto& [t, ft] : m.phi) {
      if (is_prefix(s, t) && !is_prefix(fs, ft)) p.order_preserving = false;
      if (is_strict_prefix(s, t) && !is_strict_prefix(fs, ft)) p.strict = false;
      if (incompatible(s, t) && !incompatible(fs, ft)) p.preserves_incompatibility = false;
    }
  }
  p.order_embedding = p.strict && p.preserves_incompatibility;
  return p;
}

ExistsPerfectReport check_exists_perfect(const TreeMap& m) {
  validate(m);
  if (!m.target.alph.is_product())
    fail("SchemaError", "the target of a projection-respecting embedding is a product tree");
  OrderProps phi_props = check_order_props(m);
  if (!phi_props.order_preserving)
    fail("NotOrderPreserving", "the characterizations assume an order preserving map");

  // the composed map pi after phi, as a map into the projected tree
  TreeMap composed;
  composed.source = m.source;
  composed.target = pi_tree(m.target);
  for (const auto& [s, fs] : m.phi) composed.phi[s] = pi_node(m.target.alph, fs);
  OrderProps pi_props = check_order_props(composed);

  // pi restricted to the image of phi
  std::set<Node> image;
  for (const auto& [s, fs] : m.phi) image.insert(fs);
  bool pi_restr_strict = true;
  bool pi_restr_incompat = true;
  for (const auto& a : image) {
    for (const auto& b : image) {
      Node pa = pi_node(m.target.alph, a), pb = pi_node(m.target.alph, b);
      if (is_strict_prefix(a, b) && !is_strict_prefix(pa, pb)) pi_restr_strict = false;
      if (incompatible(a, b) && !incompatible(pa, pb)) pi_restr_incompat = false;
    }
  }

  ExistsPerfectReport r;
  r.via_strict_and_pi_incompat = phi_props.strict && pi_props.preserves_incompatibility;
  r.via_pi_embedding = pi_props.order_embedding;
  r.via_both_embeddings = phi_props.order_embedding && pi_restr_strict && pi_restr_incompat;
  if (r.via_strict_and_pi_incompat != r.via_pi_embedding ||
      r.via_pi_embedding != r.via_both_embeddings)
    fail("CharacterizationMismatch", "the three characterizations disagree; this is a bug");
  r.value = r.via_pi_embedding;
  return r;
}

std::map<Node, Node> body_map(const TreeMap& m) {
  validate(m);
  OrderProps p = check_order_props(m);
  if (!p.strict) fail("NotStrict", "the branch map needs a strict order preserving map");
  std::map<Node, Node> f;
  for (const auto& x : m.source.branches()) {
    // the images of x's prefixes form a chain; their union is the longest
    Node best;
    for (std::size_t cut = 0; cut <= x.size(); ++cut) {
      Node prefix(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(cut));
      const Node& img = m.phi.at(prefix);
      if (img.size() > best.size()) best = img;
    }
    if (static_cast<int>(best.size()) != m.target.depth)
      fail("DepthShortfall", "a branch image does not reach the target depth");
    f[x] = best;
  }
  return f;
}

bool closed_image_check(const TreeMap& m) {
  OrderProps p = check_order_props(m);
  if (!p.order_embedding) fail("NotEmbedding", "the closed-image law is about order embeddings");
  auto f = body_map(m);
  std::set<Node> image_branches;
  for (const auto& [x, fx] : f) {
    (void)x;
    image_branches.insert(fx);
  }
  // downward closure of the node image
  std::set<Node> closure;
  for (const auto& [s, fs] : m.phi) {
    (void)s;
    for (std::size_t cut = 0; cut <= fs.size(); ++cut)
      closure.insert(Node(fs.begin(), fs.begin() + static_cast<std::ptrdiff_t>(cut)));
  }
  std::set<Node> closure_branches;
  for (const auto& n : closure) {
    if (static_cast<int>(n.size()) == m.target.depth) closure_branches.insert(n);
  }
  return image_branches == closure_branches;
}

}  // namespace gbh::tree
