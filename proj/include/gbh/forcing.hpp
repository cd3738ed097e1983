// The finitized forcing poset for reshaping a level of the hierarchy: a
// condition pairs a partial assignment of stems to template leaves with a
// set of node-point promises, under the coherence clauses that make the
// promises consistent with the interpretation of the template as a code.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "gbh/borelcode.hpp"
#include "gbh/space.hpp"

namespace gbh::forcing {

// The template tree: all digit strings of length at most alpha over a
// b-letter alphabet.  Leaves sit at level alpha; rank(t) = alpha - |t|.
struct Template {
  int alpha = 2;
  int b = 2;

  std::vector<std::string> internal_nodes() const;  // length < alpha
  std::vector<std::string> leaves() const;          // length == alpha
  int rank(const std::string& node) const { return alpha - static_cast<int>(node.size()); }
  bool is_internal(const std::string& node) const {
    return static_cast<int>(node.size()) < alpha;
  }
  bool is_leaf(const std::string& node) const {
    return static_cast<int>(node.size()) == alpha;
  }
  std::vector<std::string> successors(const std::string& node) const;
};

void validate(const Template& t);

// A condition: a partial leaf labeling by stems plus promise pairs.
struct Condition {
  std::map<std::string, std::string> f;                    // leaf -> stem
  std::set<std::pair<std::string, std::string>> R;         // (internal node, point)

  std::size_t weight() const { return f.size() + R.size(); }
  bool operator==(const Condition& o) const { return f == o.f && R == o.R; }
  bool operator<(const Condition& o) const { return f != o.f ? f < o.f : R < o.R; }
};

// The poset parameters: the ambient space (whose chosen points play the
// role of X), the separation targets A and B, and the size budget standing
// in for the smallness requirement on conditions.
struct Params {
  space::SpacePtr space;
  space::PointSet A;
  space::PointSet B;
  std::size_t s_max = 2;
};

struct Violation {
  std::string clause;  // "a", "b", "c", "d", "e", or "budget"
  std::string detail;
};

// All clauses plus the budget; nullopt means valid.
std::optional<Violation> check_condition(const Condition& p, const Template& tmpl,
                                         const Params& params);
inline bool is_condition(const Condition& p, const Template& tmpl, const Params& params) {
  return !check_condition(p, tmpl, params).has_value();
}

// q extends p: componentwise inclusion.
bool leq(const Condition& q, const Condition& p);

struct MeetResult {
  enum Status { met, incompatible, budget_exceeded } status = incompatible;
  std::optional<Condition> value;  // the pointwise union when it exists
};

// The pointwise union when it is a condition; the greatest lower bound.
// A union that is coherent but over budget reports budget_exceeded so the
// poset laws can separate budget artifacts from logical incompatibility.
MeetResult meet(const Condition& p, const Condition& q, const Template& tmpl,
                const Params& params);

// logical compatibility: the union is coherent, budget aside
bool compatible(const Condition& p, const Condition& q, const Template& tmpl,
                const Params& params);

// --- density -----------------------------------------------------------

// Membership in the dense set that decides the promise (t, x): the promise
// is present, or (at rank 1) a labeled leaf successor captures the point,
// or (above rank 1) a successor promise excludes it.
bool in_density_set(const Condition& p, const Template& tmpl, const std::string& t,
                    const std::string& x);

// All conditions within the budget.
std::vector<Condition> enumerate_poset(const Template& tmpl, const Params& params);

// All one-element extensions of p that are coherent and fit the budget.
std::vector<Condition> single_extensions(const Condition& p, const Template& tmpl,
                                         const Params& params, std::size_t budget);

// Searches for an extension of p inside the dense set.  The extension may
// use one budget slot beyond s_max, mirroring the one-element step of the
// density argument.
std::optional<Condition> find_density_extension(const Condition& p, const Template& tmpl,
                                                const Params& params, const std::string& t,
                                                const std::string& x);

// --- generic runs ---------------------------------------------------------

struct DenseSpec {
  enum K { promise, leaf_total } k = promise;
  std::string node;   // internal node for promise, leaf for leaf_total
  std::string point;  // only for promise
  std::string name() const;
};

struct FilterState {
  std::vector<Condition> chain;  // decreasing, starting at the empty condition
  Condition accumulated;         // the union of the chain = its last element
};

// The dense sets that make a run decide the whole template, in a meeting
// order that always succeeds: promises at the root first, then promises
// level by level, then leaf labels.
std::vector<DenseSpec> standard_dense_list(const Template& tmpl, const space::SpacePtr& sp);

// Greedy descending run meeting every listed dense set, choosing uniformly
// among the one-element extensions under the run budget.  Throws Stuck with
// the blocking set and condition when no extension exists.
FilterState build_generic(const Template& tmpl, const Params& params,
                          std::vector<DenseSpec> dense_list, unsigned seed);

// Interprets the subtree below `t` as a code tree labeled by f_G.  Throws
// PartialLabels naming the unlabeled leaves.
space::PointSet interpret_generic(const std::map<std::string, std::string>& f_G,
                                  const std::string& t, const Template& tmpl,
                                  const space::SpacePtr& sp);

// --- rank crank, restriction, projection ------------------------------------

// Max template rank among promise nodes whose points avoid H; 0 when every
// promised point lies in H.
int crank(const Condition& p, const space::PointSet& H, const Template& tmpl);

// Keeps the labeling, keeps the promises with points in H or node rank at
// most beta.  Always a condition in the single-poset setting.
Condition restrict_condition(const Condition& p, const space::PointSet& H, int beta,
                             const Template& tmpl, const Params& params);

// The projection law over an enumerated poset: for every r with
// crank(r, H) < beta, compatibility with the restriction implies
// compatibility with p itself.  False would signal a bug.
bool projection_check(const Condition& p, const space::PointSet& H, int beta,
                      const Template& tmpl, const Params& params,
                      const std::vector<Condition>& poset);

// --- linked reduction ---------------------------------------------------------

struct LinkedReduction {
  std::map<std::string, std::string> f;       // the labeling part, unchanged
  std::map<std::string, std::uint64_t> g;     // point -> encoded promise-node set
};

// g maps each promised point to an injective encoding (a bitmask over the
// internal nodes) of the set of nodes promising it.
LinkedReduction linked_reduction(const Condition& p, const Template& tmpl);

// compatibility at inner nodes only: the promise parts merge coherently
bool compatible_star(const Condition& p, const Condition& q, const Template& tmpl,
                     const Params& params);

// partial maps agree on their common domain
bool reductions_agree(const LinkedReduction& a, const LinkedReduction& b);

}  // namespace gbh::forcing
