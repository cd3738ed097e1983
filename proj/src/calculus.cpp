#include "gbh/calculus.hpp"

#include <algorithm>
#include <cctype>

namespace gbh::cal {

using ord::Cmp;
using ord::CofClass;
using ord::Ordinal;
using pc::Base;
using pc::CardinalContext;
using pc::Kind;
using pc::OrderFact;
using pc::Pointclass;
using pc::Rel;
using pc::Situation;
using pc::SpaceFlag;

namespace {

const Ordinal kOne = Ordinal::finite(1);

// level >= 1 written uniquely as 1+a
Ordinal alpha_of_level(const Ordinal& l) {
  if (l.is_zero()) fail("SchemaError", "levels start at 1");
  if (l.is_finite()) return Ordinal::finite(l.as_finite() - 1);
  return l;  // 1+a = a for infinite a
}

Ordinal level_of_alpha(const Ordinal& a) { return ord::add(kOne, a); }

bool singular_with_clopen(const Situation& sit) {
  return sit.ctx.is_singular() && sit.space.has(SpaceFlag::opens_are_cofk_unions_of_closed);
}

std::vector<std::string> missing_fine_assumptions(const Situation& sit) {
  std::vector<std::string> m;
  if (!sit.ctx.is_singular()) m.push_back("kappa singular");
  if (!sit.space.has(SpaceFlag::opens_are_cofk_unions_of_closed))
    m.push_back(to_string(SpaceFlag::opens_are_cofk_unions_of_closed));
  return m;
}

SizeSym resolve_cofk(const CardinalContext& ctx) {
  if (!ctx.is_singular()) return SizeSym::of(SizeSym::kappa);
  if (ctx.cof_kappa == CofClass::omega) return SizeSym::of(SizeSym::omega);
  return SizeSym::of(SizeSym::cofk);
}

SizeSym sym_of_cof(CofClass c, const CardinalContext& ctx) {
  switch (c) {
    case CofClass::finite: fail("SchemaError", "a cofinality parameter cannot be finite");
    case CofClass::omega: return SizeSym::of(SizeSym::omega);
    case CofClass::cof_kappa: return resolve_cofk(ctx);
    case CofClass::other_lt_kappa: return SizeSym::of(SizeSym::oltk);
    case CofClass::kappa: return SizeSym::of(SizeSym::kappa);
  }
  fail("SchemaError", "bad cofinality class");
}

enum class SymCmp { lt, eq, gt, unknown };

// Order between symbolic cardinals; only forced comparisons are decided.
SymCmp cmp_sym(const SizeSym& a, const SizeSym& b) {
  if (a.k == b.k) {
    if (a.k == SizeSym::finite) return a.n < b.n ? SymCmp::lt : a.n > b.n ? SymCmp::gt : SymCmp::eq;
    if (a.k == SizeSym::oltk) return SymCmp::unknown;  // possibly different cardinals
    return SymCmp::eq;
  }
  if (a.k == SizeSym::finite) return SymCmp::lt;
  if (b.k == SizeSym::finite) return SymCmp::gt;
  if (b.k == SizeSym::kappa) return SymCmp::lt;  // omega, cofk, oltk all sit below kappa
  if (a.k == SizeSym::kappa) return SymCmp::gt;
  return SymCmp::unknown;  // omega vs cofk vs oltk: not imposed
}

// query size fits under a positive table entry "closed below `cap`"
bool size_within(const SizeBound& q, const SizeSym& cap) {
  SymCmp c = cmp_sym(q.sym, cap);
  if (q.less_than) return c == SymCmp::lt || c == SymCmp::eq;
  return c == SymCmp::lt;
}

// query size reaches a negative table entry "not closed at `cap`"
bool size_reaches(const SizeBound& q, const SizeSym& cap) {
  SymCmp c = cmp_sym(q.sym, cap);
  if (q.less_than) return c == SymCmp::gt;  // sizes below q.sym include cap
  return c == SymCmp::gt || c == SymCmp::eq;
}

// everything this artifact can denote as a size is at most kappa
bool size_at_most_kappa(const SizeBound&) { return true; }

// --- order facts ------------------------------------------------------

// Facts about both bases, closed under the parity translation when it is
// available in the situation.
class FactPool {
 public:
  explicit FactPool(const Situation& sit) {
    for (const auto& f : sit.facts) add(f);
    if (singular_with_clopen(sit)) {
      auto snapshot = all_;
      for (const auto& f : snapshot) {
        try {
          add(translate_order(f, sit));
        } catch (const Error&) {
          // untranslatable shapes contribute on their own base only
        }
      }
    }
  }

  // some fact implies ord_base > level
  bool known_gt(Base base, const Ordinal& level) const {
    for (const auto& f : all_) {
      if (f.base != base) continue;
      if (f.rel == Rel::gt && ord::leq(level, f.bound)) return true;
      if (f.rel == Rel::eq && ord::lt(level, f.bound)) return true;
    }
    return false;
  }

  // some fact implies ord_base <= level
  bool known_le(Base base, const Ordinal& level) const {
    for (const auto& f : all_) {
      if (f.base != base) continue;
      if ((f.rel == Rel::le || f.rel == Rel::eq) && ord::leq(f.bound, level)) return true;
    }
    return false;
  }

 private:
  void add(const OrderFact& f) { all_.push_back(f); }
  std::vector<OrderFact> all_;
};

// --- canonical forms ---------------------------------------------------

// After normalization a class is coarse (kappa-plus), or the self-dual
// fine class at an odd index, or not normalizable in this situation.
struct Canon {
  enum Shape { coarse, fine_odd, borel, stuck } shape = stuck;
  Kind kind = Kind::Sigma;  // for coarse
  Ordinal level;            // coarse level or fine odd index
  std::vector<std::string> route;  // parity rules used, prepended to traces
  std::string missing;             // for stuck
};

Canon canonize(const Pointclass& p, const Situation& sit) {
  Canon c;
  if (p.kind == Kind::Borel) {
    if (p.base == Base::kappa_plus) {
      c.shape = Canon::borel;
      return c;
    }
    if (!sit.ctx.is_singular()) {
      c.shape = Canon::stuck;
      c.missing = "kappa singular";
      return c;
    }
    c.shape = Canon::borel;
    c.route.push_back("borel-merge");
    return c;
  }
  if (p.base == Base::kappa_plus) {
    c.shape = Canon::coarse;
    c.kind = p.kind;
    c.level = *p.level;
    return c;
  }
  auto missing = missing_fine_assumptions(sit);
  if (!missing.empty()) {
    c.shape = Canon::stuck;
    for (const auto& m : missing) {
      if (!c.missing.empty()) c.missing += ", ";
      c.missing += m;
    }
    return c;
  }
  Ordinal a = alpha_of_level(*p.level);
  if (a.is_even()) {
    c.shape = Canon::coarse;
    c.kind = p.kind;
    c.level = level_of_alpha(ord::half(a));
    c.route.push_back("parity-even");
    return c;
  }
  c.shape = Canon::fine_odd;
  c.kind = Kind::Delta;
  c.level = *p.level;
  c.route.push_back("parity-odd");
  return c;
}

Verdict with_route(Verdict v, const std::vector<std::string>& route) {
  std::vector<TraceStep> steps;
  for (const auto& id : route) {
    const Rule* r = find_rule(id);
    steps.push_back({r->id, r->statement});
  }
  steps.insert(steps.end(), v.trace.begin(), v.trace.end());
  v.trace = std::move(steps);
  return v;
}

// --- coarse inclusion engine -------------------------------------------

// p_kind at level lp included in q_kind at level lq, both coarse.
Verdict incl_coarse(Kind pk, const Ordinal& lp, Kind qk, const Ordinal& lq, const Situation& sit,
                    const FactPool& facts) {
  bool increasing_flag = sit.space.has(SpaceFlag::regular_hausdorff_weight_le_kappa);
  // a collapse bound at or below lq swallows everything
  if (facts.known_le(Base::kappa_plus, lq)) return holds({"ord-le-collapse", "ord-fact"});

  Cmp lc = ord::compare(lp, lq);
  if (lc == Cmp::incomparable) return unknown("levels are incomparable abstract limits");

  if (lc == Cmp::eq) {
    if (pk == qk) return holds({"incl-refl"});
    if (pk == Kind::Delta) return holds({"incl-delta-lower"});
    // Sigma vs Pi, Sigma vs Delta, ... at the same level
    if (facts.known_gt(Base::kappa_plus, lp)) return fails({"proper-delta", "ord-fact"});
    return unknown("no order fact settles self-duality at this level");
  }

  if (lc == Cmp::lt) {
    bool p_lvl1 = (lp == kOne);
    bool q_lvl2 = (lq == Ordinal::finite(2));
    auto lvl12 = [&](const char* route_rule) -> Verdict {
      // level 1 into level 2 needs the increasing hypothesis
      if (increasing_flag) return holds({"incl-1-to-2"});
      return unknown(std::string("missing ") +
                     pc::to_string(SpaceFlag::regular_hausdorff_weight_le_kappa) + " for " +
                     route_rule);
    };
    switch (qk) {
      case Kind::Sigma:
        if (pk == Kind::Pi || pk == Kind::Delta) return holds({"incl-def-cross"});
        // Sigma_lp into Sigma_lq
        if (!p_lvl1) return holds({"incl-above-2"});
        if (q_lvl2) return lvl12("incl-1-to-2");
        return holds({"incl-1-to-3"});
      case Kind::Pi:
        if (pk == Kind::Sigma || pk == Kind::Delta) return holds({"incl-def-cross"});
        if (!p_lvl1) return holds({"incl-above-2"});
        if (q_lvl2) return lvl12("incl-1-to-2");
        return holds({"incl-1-to-3"});
      case Kind::Delta:
        if (pk == Kind::Delta) return holds({"incl-delta-mono"});
        if (!p_lvl1) return holds({"incl-into-delta"});
        if (q_lvl2) return lvl12("incl-into-delta");
        return holds({"incl-1-to-3", "incl-into-delta"});
      case Kind::Borel:
        break;
    }
    return unknown("");
  }

  // lp > lq: containment downward happens only under collapse
  if (facts.known_gt(Base::kappa_plus, lp)) return fails({"proper-union", "ord-fact"});
  return unknown("no order fact rules out a collapse below the higher level");
}

// Bounds for the self-dual fine class at odd index 1+a (a = d+1, d even):
// the coarse Sigma and Pi at level 1+d/2 sit inside it, and it sits inside
// the coarse Delta at level 1+d/2+1.
struct FineSandwich {
  Ordinal lower;
  Ordinal upper;
};

FineSandwich sandwich(const Ordinal& fine_level) {
  Ordinal a = alpha_of_level(fine_level);  // odd
  Ordinal d = ord::pred(a);                // even
  FineSandwich s;
  s.lower = level_of_alpha(ord::half(d));
  s.upper = ord::add(s.lower, kOne);
  return s;
}

// p contained in q, both canonical.
Verdict incl_canon(const Canon& a, const Canon& b, const Situation& sit, const FactPool& facts) {
  std::vector<std::string> route = a.route;
  route.insert(route.end(), b.route.begin(), b.route.end());

  if (b.shape == Canon::borel) return with_route(holds({"borel-top"}), route);

  if (a.shape == Canon::borel) {
    // Borel inside a leveled class: exactly a collapse bound at that level
    const Ordinal& lq = b.level;
    Base qb = b.shape == Canon::fine_odd ? Base::kappa : Base::kappa_plus;
    if (facts.known_le(qb, lq)) return with_route(holds({"ord-le-collapse", "ord-fact"}), route);
    if (facts.known_gt(qb, lq)) return with_route(fails({"ord-def", "ord-fact"}), route);
    return unknown("no order fact decides whether the hierarchy collapses at this level");
  }

  if (a.shape == Canon::coarse && b.shape == Canon::coarse)
    return with_route(incl_coarse(a.kind, a.level, b.kind, b.level, sit, facts), route);

  if (a.shape == Canon::fine_odd && b.shape == Canon::fine_odd) {
    Cmp c = ord::compare(a.level, b.level);
    if (c == Cmp::eq) return with_route(holds({"incl-refl"}), route);
    if (c == Cmp::lt) return with_route(holds({"incl-delta-mono"}), route);
    if (c == Cmp::gt) {
      if (facts.known_gt(Base::kappa, a.level))
        return with_route(fails({"proper-union-fine", "ord-fact"}), route);
      return unknown("no order fact rules out a collapse below the higher fine level");
    }
    return unknown("levels are incomparable abstract limits");
  }

  if (a.shape == Canon::fine_odd) {
    // via the sandwich: lower coarse classes force failure, the upper
    // Delta forces success
    FineSandwich s = sandwich(a.level);
    Verdict up = incl_coarse(Kind::Delta, s.upper, b.kind, b.level, sit, facts);
    if (up.answer == Answer::holds) return with_route(up, route);
    Verdict lo_s = incl_coarse(Kind::Sigma, s.lower, b.kind, b.level, sit, facts);
    if (lo_s.answer == Answer::fails) return with_route(lo_s, route);
    Verdict lo_p = incl_coarse(Kind::Pi, s.lower, b.kind, b.level, sit, facts);
    if (lo_p.answer == Answer::fails) return with_route(lo_p, route);
    return unknown("the fine self-dual class is only bounded between coarse levels here");
  }

  // a coarse, b fine_odd
  FineSandwich s = sandwich(b.level);
  Verdict lo_s = incl_coarse(a.kind, a.level, Kind::Sigma, s.lower, sit, facts);
  if (lo_s.answer == Answer::holds) return with_route(lo_s, route);
  Verdict lo_p = incl_coarse(a.kind, a.level, Kind::Pi, s.lower, sit, facts);
  if (lo_p.answer == Answer::holds) return with_route(lo_p, route);
  Verdict up = incl_coarse(a.kind, a.level, Kind::Delta, s.upper, sit, facts);
  if (up.answer == Answer::fails) return with_route(up, route);
  return unknown("the fine self-dual class is only bounded between coarse levels here");
}

}  // namespace

// --- public: sizes ------------------------------------------------------

SizeBound parse_size(const std::string& text) {
  size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  SizeBound b;
  if (i < text.size() && text[i] == '<') {
    b.less_than = true;
    ++i;
  }
  std::string rest = text.substr(i);
  while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest.back()))) rest.pop_back();
  size_t j = 0;
  while (j < rest.size() && std::isspace(static_cast<unsigned char>(rest[j]))) ++j;
  rest = rest.substr(j);
  if (rest.empty()) fail("ParseError", "empty size '" + text + "'");
  if (rest == "omega" || rest == "w") {
    b.sym = SizeSym::of(SizeSym::omega);
  } else if (rest == "cofk") {
    b.sym = SizeSym::of(SizeSym::cofk);
  } else if (rest == "oltk") {
    b.sym = SizeSym::of(SizeSym::oltk);
  } else if (rest == "kappa") {
    b.sym = SizeSym::of(SizeSym::kappa);
  } else if (std::isdigit(static_cast<unsigned char>(rest[0]))) {
    b.sym = SizeSym::fin(std::stoull(rest));
  } else {
    // an ordinal expression: classify by cardinality
    Ordinal o = ord::parse_ordinal(rest);
    if (o.has_atom()) fail("ParseError", "abstract limits are not sizes: '" + text + "'");
    b.sym = o.is_finite() ? SizeSym::fin(o.as_finite()) : SizeSym::of(SizeSym::omega);
  }
  return b;
}

std::string to_string(const SizeBound& s) {
  std::string r = s.less_than ? "<" : "";
  switch (s.sym.k) {
    case SizeSym::finite: return r + std::to_string(s.sym.n);
    case SizeSym::omega: return r + "omega";
    case SizeSym::cofk: return r + "cofk";
    case SizeSym::oltk: return r + "oltk";
    case SizeSym::kappa: return r + "kappa";
  }
  return r + "?";
}

std::string to_string(SetOp op) {
  switch (op) {
    case SetOp::union_: return "union";
    case SetOp::intersection: return "intersection";
    case SetOp::complement: return "complement";
  }
  return "?";
}

SizeSym level_hat(const Ordinal& level, const CardinalContext& ctx) {
  if (level.is_zero()) fail("SchemaError", "levels start at 1");
  if (level.is_successor()) return resolve_cofk(ctx);
  return sym_of_cof(ord::cofinality(level), ctx);
}

// --- public: normalize / dual -------------------------------------------

Pointclass normalize(const Pointclass& p, const Situation& sit) {
  pc::validate(p);
  Canon c = canonize(p, sit);
  if (c.shape == Canon::stuck) throw MissingAssumption({c.missing});
  Pointclass r;
  if (c.shape == Canon::borel) {
    r.kind = Kind::Borel;
    r.base = Base::kappa_plus;
    return r;
  }
  if (c.shape == Canon::coarse) {
    r.kind = c.kind;
    r.level = c.level;
    r.base = Base::kappa_plus;
    return r;
  }
  r.kind = Kind::Delta;
  r.level = c.level;
  r.base = Base::kappa;
  return r;
}

Pointclass dual(const Pointclass& p) {
  pc::validate(p);
  Pointclass r = p;
  if (p.kind == Kind::Sigma) r.kind = Kind::Pi;
  if (p.kind == Kind::Pi) r.kind = Kind::Sigma;
  return r;
}

// --- public: compare ------------------------------------------------------

Verdict compare(const Pointclass& p, const Pointclass& q, const Situation& sit) {
  pc::validate(p);
  pc::validate(q);
  pc::validate(sit.ctx);
  FactPool facts(sit);
  Canon a = canonize(p, sit);
  Canon b = canonize(q, sit);
  if (a.shape == Canon::stuck || b.shape == Canon::stuck) {
    std::string m = a.shape == Canon::stuck ? a.missing : b.missing;
    return unknown("cannot interpret the fine base here; missing: " + m);
  }
  return incl_canon(a, b, sit, facts);
}

// --- public: closure ------------------------------------------------------

namespace {

// negative closure preconditions: the optimality results need a regular
// base, or a singular base with clopen-decomposable opens
bool optimality_available(const Situation& sit) {
  return !sit.ctx.is_singular() || singular_with_clopen(sit);
}

Verdict closure_coarse(Kind kind, const Ordinal& level, SetOp op,
                       const std::optional<SizeBound>& size, const Situation& sit,
                       const FactPool& facts) {
  const bool lvl1 = (level == kOne);
  SizeSym hat = level_hat(level, sit.ctx);

  if (op == SetOp::complement) {
    if (kind == Kind::Delta) return holds({"clos-delta-compl"});
    if (optimality_available(sit) && facts.known_gt(Base::kappa_plus, level))
      return fails({"opt-compl", "ord-fact"});
    return unknown("closure under complements at this level would collapse the hierarchy; no fact decides it");
  }
  if (!size) fail("SchemaError", "union/intersection closure queries need a size");

  const bool easy_direction =  // the side closed up to kappa outright
      (kind == Kind::Sigma && op == SetOp::union_) || (kind == Kind::Pi && op == SetOp::intersection);
  const bool hat_direction =  // the side governed by the cofinality parameter
      (kind == Kind::Sigma && op == SetOp::intersection) || (kind == Kind::Pi && op == SetOp::union_) ||
      kind == Kind::Delta;

  if (easy_direction && size_at_most_kappa(*size)) return holds({"clos-union-kappa"});

  if (hat_direction) {
    std::vector<std::string> pos = kind == Kind::Delta
                                       ? std::vector<std::string>{"clos-delta-hat"}
                                       : std::vector<std::string>{"clos-inter-hat"};
    if (lvl1) {
      if (sit.space.has(SpaceFlag::cofk_additive)) {
        pos.push_back("clos-level1-additivity");
        if (size_within(*size, hat)) return holds(pos);
      }
    } else if (size_within(*size, hat)) {
      return holds(pos);
    }
    // optimality: not closed once the size reaches the parameter
    if (optimality_available(sit) && facts.known_gt(Base::kappa_plus, level) &&
        size_reaches(*size, hat)) {
      if (kind != Kind::Delta) return fails({"opt-inter-hat", "ord-fact"});
      if (!lvl1) return fails({"opt-delta-hat", "ord-fact"});
      if (sit.space.has(SpaceFlag::subspace_of_cantor))
        return fails({"opt-delta-hat", "ord-fact"});
      return unknown("the level-1 ambiguous case needs the space to sit inside the generalized Cantor space");
    }
    if (lvl1 && !sit.space.has(SpaceFlag::cofk_additive))
      return unknown("level-1 closure under short intersections is the additivity of the space; flag not set");
    return unknown("the size does not compare with the level's cofinality parameter, or no order fact applies");
  }
  return unknown("");
}

Verdict closure_fine_odd(const Ordinal& level, SetOp op, const std::optional<SizeBound>& size,
                         const Situation& sit, const FactPool& facts) {
  SizeSym cofk = resolve_cofk(sit.ctx);
  if (op == SetOp::complement) return holds({"clos-odd-algebra"});
  if (!size) fail("SchemaError", "union/intersection closure queries need a size");
  if (size_within(*size, cofk)) return holds({"clos-odd-algebra"});
  if (facts.known_gt(Base::kappa, level) && size_reaches(*size, cofk))
    return fails({"opt-odd-fine", "ord-fact"});
  return unknown("the size does not compare with cof(kappa), or no fine order fact applies");
}

}  // namespace

namespace {

// a query's symbolic cof(kappa) means the context's cof(kappa)
std::optional<SizeBound> resolve_size(const std::optional<SizeBound>& size,
                                      const CardinalContext& ctx) {
  if (!size || size->sym.k != SizeSym::cofk) return size;
  SizeBound r = *size;
  r.sym = resolve_cofk(ctx);
  return r;
}

}  // namespace

Verdict closure(const Pointclass& p, SetOp op, const std::optional<SizeBound>& raw_size,
                const Situation& sit) {
  pc::validate(p);
  pc::validate(sit.ctx);
  std::optional<SizeBound> size = resolve_size(raw_size, sit.ctx);
  FactPool facts(sit);
  Canon c = canonize(p, sit);
  if (c.shape == Canon::stuck)
    return unknown("cannot interpret the fine base here; missing: " + c.missing);
  if (c.shape == Canon::borel) {
    if (op == SetOp::complement || !size || size_at_most_kappa(*size))
      return with_route(holds({"borel-algebra"}), c.route);
    return unknown("");
  }
  if (c.shape == Canon::coarse)
    return with_route(closure_coarse(c.kind, c.level, op, size, sit, facts), c.route);
  return with_route(closure_fine_odd(c.level, op, size, sit, facts), c.route);
}

// --- public: order translation --------------------------------------------

pc::OrderFact translate_order(const OrderFact& f, const Situation& sit) {
  auto missing = missing_fine_assumptions(sit);
  if (!missing.empty()) throw MissingAssumption(missing);
  if (f.bound.is_zero()) fail("SchemaError", "order bounds start at 1");

  OrderFact out;
  out.base = f.base == Base::kappa ? Base::kappa_plus : Base::kappa;

  // limit bounds are common fixed points of the two orders
  if (f.bound.is_limit() && f.rel == Rel::eq) {
    out.rel = Rel::eq;
    out.bound = f.bound;
    return out;
  }

  Ordinal a = alpha_of_level(f.bound);
  if (f.base == Base::kappa_plus) {
    // 1+a  ->  1+2a
    Ordinal target = level_of_alpha(ord::double_of(a));
    if (f.rel == Rel::le || f.rel == Rel::gt) {
      out.rel = f.rel;
      out.bound = target;
      return out;
    }
    // eq with a successor bound narrows to a two-element range; keep the
    // sound upper part
    out.rel = Rel::le;
    out.bound = target;
    return out;
  }

  // fine to coarse: even tails translate exactly, odd tails are first
  // weakened to the adjacent even bound
  if (f.rel == Rel::le || f.rel == Rel::eq) {
    Ordinal even_a = a.is_even() ? a : ord::add(a, kOne);
    out.rel = Rel::le;
    out.bound = level_of_alpha(ord::half(even_a));
    if (f.rel == Rel::eq && f.bound.is_limit()) out.rel = Rel::eq;
    return out;
  }
  // gt: ord_k > 1+a; for odd a weaken to the even bound below
  Ordinal even_a = a.is_even() ? a : ord::pred(a);
  out.rel = Rel::gt;
  out.bound = level_of_alpha(ord::half(even_a));
  return out;
}

// --- public: collapse criteria ---------------------------------------------

namespace {

struct DerivedBound {
  Base base;
  Ordinal level;
  std::vector<std::string> rules;
};

// whether the hypothesis "level 1 and its duals sit inside the level-a
// additive class" is automatic at this level
bool level_one_absorbed(const Ordinal& level, const Situation& sit) {
  Cmp c = ord::compare(level, Ordinal::finite(3));
  if (c == Cmp::gt || c == Cmp::eq) return true;
  if (level == Ordinal::finite(2))
    return sit.space.has(SpaceFlag::regular_hausdorff_weight_le_kappa);
  return false;
}

void derive_from_classeq(const ClassEq& eq, const Situation& sit, std::vector<DerivedBound>& out) {
  const Pointclass& a = eq.a;
  const Pointclass& b = eq.b;
  if (a.kind == Kind::Borel || b.kind == Kind::Borel) return;
  if (a.base != b.base) return;  // cross-base equalities are handled via normalize upstream

  if (a.base == Base::kappa_plus) {
    Cmp c = ord::compare(*a.level, *b.level);
    const Pointclass& lo = (c == Cmp::gt) ? b : a;
    const Pointclass& hi = (c == Cmp::gt) ? a : b;
    if (c == Cmp::eq) {
      // self-duality at a level; the generating length of the coarse
      // algebra is a successor cardinal, hence regular
      bool sigma_pi = (a.kind == Kind::Sigma && b.kind == Kind::Pi) ||
                      (a.kind == Kind::Pi && b.kind == Kind::Sigma);
      bool with_delta = a.kind == Kind::Delta || b.kind == Kind::Delta;
      if (sigma_pi) out.push_back({Base::kappa_plus, *a.level, {"coll-selfdual"}});
      else if (with_delta && a.kind != b.kind)
        out.push_back({Base::kappa_plus, *a.level, {"incl-delta-lower", "coll-selfdual"}});
      return;
    }
    if (c == Cmp::incomparable) return;
    // lo.level < hi.level
    if (hi.kind == Kind::Sigma || hi.kind == Kind::Pi) {
      bool same_kind = lo.kind == hi.kind;
      bool delta_lo = lo.kind == Kind::Delta;
      if (same_kind || delta_lo) {
        out.push_back({Base::kappa_plus, *lo.level, {"coll-eq-up"}});
      } else if (level_one_absorbed(*lo.level, sit)) {
        out.push_back({Base::kappa_plus, *lo.level, {"coll-eq-up"}});
      }
      return;
    }
    if (hi.kind == Kind::Delta) {
      out.push_back({Base::kappa_plus, *lo.level, {"coll-delta-eq"}});
    }
    return;
  }

  // fine base: needs the singular context with clopen-decomposable opens
  if (!singular_with_clopen(sit)) return;
  Cmp c = ord::compare(*a.level, *b.level);
  if (c == Cmp::eq) {
    bool sigma_pi = (a.kind == Kind::Sigma && b.kind == Kind::Pi) ||
                    (a.kind == Kind::Pi && b.kind == Kind::Sigma);
    if (!sigma_pi) return;
    Ordinal al = alpha_of_level(*a.level);
    // odd-index self-duality is unconditional and witnesses nothing
    if (al.is_even()) out.push_back({Base::kappa, *a.level, {"coll-selfdual-even"}});
    return;
  }
  if (c == Cmp::incomparable) return;
  const Pointclass& lo = (c == Cmp::gt) ? b : a;
  const Pointclass& hi = (c == Cmp::gt) ? a : b;
  if (hi.kind == Kind::Sigma || hi.kind == Kind::Pi) {
    out.push_back({Base::kappa, *lo.level, {"coll-eq-up"}});
  } else if (hi.kind == Kind::Delta) {
    out.push_back({Base::kappa, *lo.level, {"coll-delta-eq"}});
  }
}

void derive_from_closure(const ClosureFact& raw, const Situation& sit,
                         std::vector<DerivedBound>& out) {
  ClosureFact cf = raw;
  if (auto rs = resolve_size(std::optional<SizeBound>(cf.size), sit.ctx)) cf.size = *rs;
  const Pointclass& p = cf.p;
  if (p.kind == Kind::Borel) return;

  if (p.base == Base::kappa_plus) {
    // closure under intersections of every length below the generating
    // length (= up to kappa) collapses the hierarchy at the level
    bool long_enough = !cf.size.less_than ? cmp_sym(cf.size.sym, SizeSym::of(SizeSym::kappa)) == SymCmp::eq
                                          : cmp_sym(cf.size.sym, SizeSym::of(SizeSym::kappa)) != SymCmp::lt;
    if (!long_enough) return;
    bool right_direction = (p.kind == Kind::Sigma && cf.op == SetOp::intersection) ||
                           (p.kind == Kind::Pi && cf.op == SetOp::union_) ||
                           (p.kind == Kind::Delta && cf.op != SetOp::complement);
    if (!right_direction) return;
    if (!level_one_absorbed(*p.level, sit)) return;
    out.push_back({Base::kappa_plus, *p.level, {"coll-inter-gamma"}});
    return;
  }

  if (!singular_with_clopen(sit)) return;
  // fine base: closure under kappa-sized (or all shorter-than-kappa)
  // intersections collapses the fine hierarchy at the level
  SymCmp vs_kappa = cmp_sym(cf.size.sym, SizeSym::of(SizeSym::kappa));
  bool long_enough = cf.size.less_than ? vs_kappa != SymCmp::lt : vs_kappa == SymCmp::eq;
  if (!long_enough) return;
  bool right_direction = (p.kind == Kind::Sigma && cf.op == SetOp::intersection) ||
                         (p.kind == Kind::Pi && cf.op == SetOp::union_);
  bool delta_direction = p.kind == Kind::Delta && cf.op != SetOp::complement;
  if (delta_direction && alpha_of_level(*p.level).is_zero()) {
    if (!sit.space.has(SpaceFlag::subspace_of_cantor)) return;
  }
  if (!right_direction && !delta_direction) return;
  out.push_back({Base::kappa, *p.level, {"coll-inter-gamma"}});
}

}  // namespace

Verdict collapse_criteria(const std::vector<Evidence>& evidence, const Ordinal& target_level,
                          Base base, const Situation& sit) {
  pc::validate(sit.ctx);
  FactPool facts(sit);
  std::vector<DerivedBound> bounds;
  for (const auto& ev : evidence) {
    if (const auto* eq = std::get_if<ClassEq>(&ev)) derive_from_classeq(*eq, sit, bounds);
    else if (const auto* cf = std::get_if<ClosureFact>(&ev)) derive_from_closure(*cf, sit, bounds);
    else if (const auto* of = std::get_if<pc::OrderFact>(&ev)) {
      if (of->rel == Rel::le || of->rel == Rel::eq)
        bounds.push_back({of->base, of->bound, {"ord-fact"}});
    }
  }

  auto usable = [&](const DerivedBound& d) -> std::optional<DerivedBound> {
    if (d.base == base) return d;
    if (!singular_with_clopen(sit)) return std::nullopt;
    OrderFact f{Rel::le, d.level, d.base};
    OrderFact t = translate_order(f, sit);
    DerivedBound moved{t.base, t.bound, d.rules};
    moved.rules.push_back("ord-even-translate");
    return moved;
  };

  for (const auto& d : bounds) {
    auto m = usable(d);
    if (!m) continue;
    Cmp c = ord::compare(m->level, target_level);
    if (c == Cmp::eq) return holds(m->rules);
    if (c == Cmp::lt) {
      auto rules = m->rules;
      rules.push_back("ord-weaken");
      return holds(rules);
    }
  }

  // a direct order fact can refute the bound
  if (facts.known_gt(base, target_level)) return fails({"ord-def", "ord-fact"});
  for (const auto& ev : evidence) {
    if (const auto* of = std::get_if<pc::OrderFact>(&ev)) {
      FactPool one(Situation{sit.ctx, sit.space, {*of}});
      if (one.known_gt(base, target_level)) return fails({"ord-def", "ord-fact"});
    }
  }
  return unknown("no evidence item witnesses a collapse at or below the target level");
}

// --- public: universal sets -------------------------------------------------

Verdict universal_exists(const Pointclass& p, const Situation& sit) {
  pc::validate(p);
  pc::validate(sit.ctx);
  if (p.base == Base::kappa_plus) {
    if (p.kind == Kind::Sigma || p.kind == Kind::Pi) return holds({"univ-sigma-pi"});
    return fails({"univ-selfdual-none"});
  }
  auto missing = missing_fine_assumptions(sit);
  if (!missing.empty()) {
    std::string m;
    for (const auto& x : missing) {
      if (!m.empty()) m += ", ";
      m += x;
    }
    return unknown("fine-base universal sets need: " + m);
  }
  if (p.kind == Kind::Borel) return with_route(fails({"univ-selfdual-none"}), {"borel-merge"});
  Ordinal a = alpha_of_level(*p.level);
  if (!a.is_even()) return fails({"univ-odd-none"});
  if (p.kind == Kind::Delta) return with_route(fails({"univ-selfdual-none"}), {"parity-even"});
  return holds({"univ-even-fine", "univ-sigma-pi"});
}

// --- public: function hierarchy ----------------------------------------------

pc::OrderFact function_hierarchy_order(const OrderFact& f, bool target_hausdorff,
                                       bool target_has_two_points) {
  std::vector<std::string> missing;
  if (!target_hausdorff) missing.push_back("target space Hausdorff");
  if (!target_has_two_points) missing.push_back("target space with at least two points");
  if (!missing.empty()) throw MissingAssumption(missing);
  if (f.base != Base::kappa_plus)
    fail("SchemaError", "the function hierarchy is stratified over the coarse base");
  return f;
}

}  // namespace gbh::cal
