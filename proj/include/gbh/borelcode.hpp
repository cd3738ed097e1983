// Well-founded code trees with leaf stems and the complement-of-intersection
// interpretation: a leaf denotes its basic set inside X, an internal node
// denotes the intersection of the complements of its children.  Includes the
// rank function, code combinators, and the canonical tree whose branch
// projection recovers the coded set.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "gbh/space.hpp"

namespace gbh::code {

inline constexpr std::size_t kDefaultNodeCap = 12;

// Nodes are strings of child letters; "" is the root, children of a node n
// are n+letter for the letters listed in `children`.  Leaves carry stems.
struct CodeTree {
  std::map<std::string, std::vector<char>> children;
  std::map<std::string, std::string> labels;

  bool is_leaf(const std::string& node) const;
  std::vector<std::string> nodes() const;  // preorder
  std::size_t node_count() const { return children.size(); }

  // a code whose interpretation is the whole of X: a root leaf with the
  // empty stem
  static CodeTree whole();
  // a code for the empty set: the complement of whole()
  static CodeTree empty_set();
};

// finite, prefix-closed, every leaf labeled, internal nodes nonempty
void validate(const CodeTree& code);

// rank 0 at leaves, 1 + max over children elsewhere
std::map<std::string, int> rank(const CodeTree& code);
int root_rank(const CodeTree& code);

// The interpretation of the root relative to X.  Throws BadStem when a
// label is not a stem of the space.
space::PointSet interpret(const CodeTree& code, const space::SpacePtr& sp,
                          const space::PointSet& X);

// The same recursion unfolded into a set-algebra expression for the
// brute-force oracle.
space::SetExprPtr unfold(const CodeTree& code, const space::SpacePtr& sp,
                         const space::PointSet& X);

// Combinators.  Interpretation commutes: complement gives X minus the set,
// union and intersection give the pointwise operations.  Rank grows by at
// most 1 for complement and intersection and at most 2 for union.
CodeTree code_complement(const CodeTree& code);
CodeTree code_union(const std::vector<CodeTree>& codes);
CodeTree code_intersection(const std::vector<CodeTree>& codes);

// --- canonical tree -----------------------------------------------------

// A tree over the product alphabet (point letter, bit, node index) whose
// full-length branches are the triples (x, y, z) where y correctly models
// the interpretation at every node of the code and z records witnesses.
struct SuslinTree {
  struct Entry {
    int letter = 0;  // point coordinate, padded with 0 beyond the depth
    int bit = 0;     // y value at the node with this position, padded 0
    int z = 0;       // witness node index, root index 0 when unused
    bool operator==(const Entry& o) const {
      return letter == o.letter && bit == o.bit && z == o.z;
    }
    bool operator<(const Entry& o) const {
      if (letter != o.letter) return letter < o.letter;
      if (bit != o.bit) return bit < o.bit;
      return z < o.z;
    }
  };
  space::SpacePtr space;
  std::size_t length = 0;  // max(depth of the space, node count)
  std::vector<std::vector<Entry>> branches;  // full-length, sorted, unique
};

// Builds the canonical tree of the code over X.  Enumerates every point of
// X against every 0/1 assignment to the nodes, keeping the assignments that
// satisfy the local correctness conditions, and expands every admissible
// witness choice.  Throws CapExceeded past the node cap.
SuslinTree canonical_tree(const CodeTree& code, const space::SpacePtr& sp,
                          const space::PointSet& X, std::size_t node_cap = kDefaultNodeCap);

// First-coordinate projection of the full-length branches.
space::PointSet project(const SuslinTree& tree);

}  // namespace gbh::code
