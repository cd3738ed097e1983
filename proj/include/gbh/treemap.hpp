// Order-preservation machinery between finite trees: strictness and
// incompatibility checks, the three equivalent characterizations of
// projection-respecting embeddings into product-alphabet trees, induced
// branch maps, and the finite closed-image check.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gbh/error.hpp"

namespace gbh::tree {

// A letter is one symbol of a simple alphabet, or a pair of a simple
// alphabet with a second coordinate for product templates.
struct Alphabet {
  int first = 2;
  int second = 0;  // 0 for simple alphabets

  bool is_product() const { return second > 0; }
  int size() const { return is_product() ? first * second : first; }
};

using Node = std::vector<int>;  // letters, encoded as first*second + w for products

// A finite prefix-closed tree of sequences of length at most `depth`.
struct FiniteTree {
  Alphabet alph;
  int depth = 1;
  std::vector<Node> nodes;  // sorted, unique, prefix-closed

  static FiniteTree full(Alphabet a, int depth);
  bool contains(const Node& n) const;
  std::vector<Node> branches() const;  // nodes of full length
};

void validate(const FiniteTree& t);

// first-coordinate projection of a product letter / node / tree
int pi_letter(const Alphabet& a, int letter);
Node pi_node(const Alphabet& a, const Node& n);
FiniteTree pi_tree(const FiniteTree& t);

bool is_prefix(const Node& a, const Node& b);          // a <= b
bool is_strict_prefix(const Node& a, const Node& b);   // a < b
bool incompatible(const Node& a, const Node& b);       // neither extends the other

// A total map from the nodes of a source tree to the nodes of a target.
struct TreeMap {
  FiniteTree source;
  FiniteTree target;
  std::map<Node, Node> phi;
};

void validate(const TreeMap& m);

struct OrderProps {
  bool order_preserving = false;
  bool strict = false;
  bool preserves_incompatibility = false;
  bool order_embedding = false;  // strict and incompatibility preserving
};

// Each flag by exhaustive pair enumeration over the source nodes.
OrderProps check_order_props(const TreeMap& m);

struct ExistsPerfectReport {
  bool value = false;
  bool via_strict_and_pi_incompat = false;  // strict, and pi after phi preserves incompatibility
  bool via_pi_embedding = false;            // pi after phi is an order embedding
  bool via_both_embeddings = false;         // phi and pi restricted to the image both embed
};

// Evaluates the three characterizations independently and checks that they
// agree; disagreement on an order-preserving map raises
// CharacterizationMismatch, which would signal an implementation bug.
// Requires the target alphabet to be a product and phi order preserving.
ExistsPerfectReport check_exists_perfect(const TreeMap& m);

// The branch map x |-> union of the images of x's prefixes.  Requires phi
// strict (NotStrict) with full-depth images on full branches
// (DepthShortfall).
std::map<Node, Node> body_map(const TreeMap& m);

// Finite closed-image law: for an order embedding, the image of the branch
// map equals the full-length branches of the downward closure of the node
// image.  Requires an order embedding (NotEmbedding).
bool closed_image_check(const TreeMap& m);

}  // namespace gbh::tree
