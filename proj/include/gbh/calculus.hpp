// The symbolic pointclass engine: normalization between the coarse
// (kappa-plus) and fine (kappa) hierarchies, duality, inclusion queries,
// closure queries, order translation, collapse criteria and universal-set
// existence.  Every holds/fails verdict carries a trace of rule-table ids.
#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "gbh/pointclass.hpp"
#include "gbh/rules.hpp"

namespace gbh::cal {

// Symbolic cardinal sizes for closure queries.  `cofk` names the definite
// cardinal cof(kappa) of the current context; `oltk` is some unspecified
// cardinal below kappa other than omega.  Distinct symbolic cardinals are
// compared only where the comparison is forced.
struct SizeSym {
  enum K { finite, omega, cofk, oltk, kappa } k = omega;
  std::uint64_t n = 0;  // only for finite

  static SizeSym fin(std::uint64_t m) { return SizeSym{finite, m}; }
  static SizeSym of(K kk) { return SizeSym{kk, 0}; }
};

// A queried size: "exactly s" or "all sizes strictly below s".
struct SizeBound {
  bool less_than = false;
  SizeSym sym;
};

// Grammar: ["<"] (nat | w | omega | cofk | oltk | kappa).
SizeBound parse_size(const std::string& text);
std::string to_string(const SizeBound& s);

enum class SetOp { union_, intersection, complement };

std::string to_string(SetOp op);

// The cofinality parameter of a level: cof(kappa) at successor levels,
// the level's own cofinality at limit levels, resolved in the context.
SizeSym level_hat(const ord::Ordinal& level, const pc::CardinalContext& ctx);

// Canonical form.  Coarse-base classes are fixed points; fine-base classes
// normalize by parity: even index 1+a maps to the coarse class at 1+a/2,
// odd index collapses Sigma/Pi to the self-dual Delta at the same fine
// index.  Throws MissingAssumption when the fine base is queried outside a
// singular context with clopen-decomposable opens.
pc::Pointclass normalize(const pc::Pointclass& p, const pc::Situation& sit);

// Sigma <-> Pi at the same level and base; Delta and Borel are fixed.
pc::Pointclass dual(const pc::Pointclass& p);

// Verdict on "p is contained in q" over the situation's space.
Verdict compare(const pc::Pointclass& p, const pc::Pointclass& q, const pc::Situation& sit);

// Verdict on "p is closed under op (of the given size)".  The size is
// ignored for complements.
Verdict closure(const pc::Pointclass& p, SetOp op, const std::optional<SizeBound>& size,
                const pc::Situation& sit);

// Moves an order fact between the two bases via the parity translation
// 1+a <-> 1+2a; limit bounds are fixed points.  Facts with odd fine tails
// are soundly weakened to the next even bound before translating.  Throws
// MissingAssumption outside singular contexts with the clopen flag.
pc::OrderFact translate_order(const pc::OrderFact& f, const pc::Situation& sit);

// Atomic evidence for collapse queries.
struct ClassEq {
  pc::Pointclass a, b;
};
struct ClosureFact {
  pc::Pointclass p;
  SetOp op = SetOp::intersection;
  SizeBound size;
};
using Evidence = std::variant<ClassEq, ClosureFact, pc::OrderFact>;

// Verdict on "the order of the hierarchy at `base` is at most
// `target_level`", derived from the evidence set.
Verdict collapse_criteria(const std::vector<Evidence>& evidence, const ord::Ordinal& target_level,
                          pc::Base base, const pc::Situation& sit);

// Verdict on "p admits a universal set parametrized by the generalized
// Cantor space".
Verdict universal_exists(const pc::Pointclass& p, const pc::Situation& sit);

// Copies an order fact between the set hierarchy and the hierarchy of
// measurable functions into a fixed target space; the two orders agree.
// Throws MissingAssumption unless the target is declared Hausdorff with at
// least two points.
pc::OrderFact function_hierarchy_order(const pc::OrderFact& f, bool target_hausdorff,
                                       bool target_has_two_points);

}  // namespace gbh::cal
