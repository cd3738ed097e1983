// Pointclass descriptors and the contexts they are interpreted in: the base
// cardinal's kind and cofinality class, topological assumption flags for the
// space, and order facts about the hierarchy on it.
#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gbh/error.hpp"
#include "gbh/ordinal.hpp"

namespace gbh::pc {

enum class Kind { Sigma, Pi, Delta, Borel };
enum class Base { kappa, kappa_plus };

std::string to_string(Kind k);
std::string to_string(Base b);

// A Sigma/Pi/Delta class at a level >= 1, or the full Borel class (no
// level), over one of the two bases.
struct Pointclass {
  Kind kind = Kind::Sigma;
  std::optional<ord::Ordinal> level;  // absent exactly for Borel
  Base base = Base::kappa_plus;

  bool operator==(const Pointclass& o) const {
    return kind == o.kind && base == o.base &&
           ((!level && !o.level) || (level && o.level && *level == *o.level));
  }
};

void validate(const Pointclass& p);

// The base cardinal kappa: regular or singular, with its cofinality class.
// The blanket cardinal-arithmetic assumption 2^{<kappa} = kappa is in force
// throughout; it is not a switch.
struct CardinalContext {
  enum class KappaKind { regular, singular };
  KappaKind kappa_kind = KappaKind::regular;
  ord::CofClass cof_kappa = ord::CofClass::kappa;

  bool is_singular() const { return kappa_kind == KappaKind::singular; }
};

void validate(const CardinalContext& ctx);

enum class SpaceFlag {
  regular_hausdorff_weight_le_kappa,
  opens_are_cofk_unions_of_closed,
  subspace_of_cantor,
  cofk_additive,
  has_cantor_copy,
  has_kplus_borel_embedding_of_cantor,
  at_most_one_nonisolated_point,
  size_gt_kappa,
};

std::string to_string(SpaceFlag f);
std::optional<SpaceFlag> space_flag_from_string(const std::string& s);

// Assumption flags for the ambient space.  Subspaces of the generalized
// Cantor space automatically are regular Hausdorff of small weight and have
// clopen-decomposable opens, so those flags are implied.
class SpaceAssumptions {
 public:
  SpaceAssumptions() = default;
  explicit SpaceAssumptions(std::initializer_list<SpaceFlag> fs) {
    for (auto f : fs) set(f);
  }

  void set(SpaceFlag f) {
    flags_.insert(f);
    if (f == SpaceFlag::subspace_of_cantor) {
      flags_.insert(SpaceFlag::regular_hausdorff_weight_le_kappa);
      flags_.insert(SpaceFlag::opens_are_cofk_unions_of_closed);
    }
  }
  bool has(SpaceFlag f) const { return flags_.count(f) > 0; }
  const std::set<SpaceFlag>& flags() const { return flags_; }

 private:
  std::set<SpaceFlag> flags_;
};

enum class Rel { le, gt, eq };

std::string to_string(Rel r);

// A fact about the order of the hierarchy on the space at one of the bases,
// e.g. "ord at kappa_plus is > 3".
struct OrderFact {
  Rel rel = Rel::le;
  ord::Ordinal bound;
  Base base = Base::kappa_plus;
};

// Everything a calculus query is relative to.
struct Situation {
  CardinalContext ctx;
  SpaceAssumptions space;
  std::vector<OrderFact> facts;
};

// Pointclass expression grammar: Sigma(0,<ordinal>,k|k+), Pi(...),
// Delta(...), Borel(k|k+).
Pointclass parse_pointclass(const std::string& text);
std::string to_string(const Pointclass& p);

}  // namespace gbh::pc
