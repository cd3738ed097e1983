#include "gbh/forcing.hpp"

#include <algorithm>
#include <functional>

namespace gbh::forcing {

using space::PointSet;
using space::SpacePtr;

namespace {

bool is_prefix_str(const std::string& s, const std::string& x) {
  return s.size() <= x.size() && x.compare(0, s.size(), s) == 0;
}

std::vector<std::string> nodes_of_length(const Template& t, int len) {
  std::vector<std::string> out;
  std::string cur(static_cast<std::size_t>(len), '0');
  std::function<void(int)> rec = [&](int pos) {
    if (pos == len) {
      out.push_back(cur);
      return;
    }
    for (int v = 0; v < t.b; ++v) {
      cur[static_cast<std::size_t>(pos)] = space::letter_char(v);
      rec(pos + 1);
    }
  };
  rec(0);
  return out;
}

std::vector<std::string> all_stems(const Template&, const space::FiniteSpace& sp) {
  std::vector<std::string> out;
  for (int len = 0; len <= sp.depth(); ++len) {
    std::string cur(static_cast<std::size_t>(len), '0');
    std::function<void(int)> rec = [&](int pos) {
      if (pos == len) {
        out.push_back(cur);
        return;
      }
      for (int v = 0; v < sp.branching(); ++v) {
        cur[static_cast<std::size_t>(pos)] = space::letter_char(v);
        rec(pos + 1);
      }
    };
    rec(0);
  }
  return out;
}

}  // namespace

void validate(const Template& t) {
  if (t.alpha < 2) fail("SchemaError", "the template index starts at 2");
  if (t.b < 2) fail("SchemaError", "template branching must be at least 2");
  double leaves = 1;
  for (int i = 0; i < t.alpha; ++i) leaves *= t.b;
  if (leaves > 4096) fail("CapExceeded", "template has too many leaves");
}

std::vector<std::string> Template::internal_nodes() const {
  std::vector<std::string> out;
  for (int len = 0; len < alpha; ++len) {
    auto level = nodes_of_length(*this, len);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::vector<std::string> Template::leaves() const { return nodes_of_length(*this, alpha); }

std::vector<std::string> Template::successors(const std::string& node) const {
  if (is_leaf(node)) return {};
  std::vector<std::string> out;
  for (int v = 0; v < b; ++v) out.push_back(node + space::letter_char(v));
  return out;
}

std::optional<Violation> check_condition(const Condition& p, const Template& tmpl,
                                         const Params& params) {
  const space::FiniteSpace& sp = *params.space;
  // (a) the labeling assigns stems to leaves
  for (const auto& [leaf, stem] : p.f) {
    if (!tmpl.is_leaf(leaf) || static_cast<int>(leaf.size()) != tmpl.alpha)
      return Violation{"a", "'" + leaf + "' is not a template leaf"};
    for (char c : leaf) {
      if (space::letter_value(c) >= tmpl.b)
        return Violation{"a", "'" + leaf + "' is outside the template alphabet"};
    }
    try {
      space::validate_stem(sp, stem);
    } catch (const Error& e) {
      return Violation{"a", e.what()};
    }
  }
  // (b) promises pair internal nodes with points of the space
  for (const auto& [node, point] : p.R) {
    if (!tmpl.is_internal(node)) return Violation{"b", "'" + node + "' is not internal"};
    for (char c : node) {
      if (space::letter_value(c) >= tmpl.b)
        return Violation{"b", "'" + node + "' is outside the template alphabet"};
    }
    if (sp.index_of(point) < 0) return Violation{"b", "'" + point + "' is not a point"};
  }
  // (c) a promise excludes the point from every successor
  for (const auto& [node, point] : p.R) {
    for (const auto& succ : tmpl.successors(node)) {
      if (tmpl.is_internal(succ)) {
        if (p.R.count({succ, point}))
          return Violation{"c", "promise at '" + node + "' and at its successor '" + succ +
                                    "' for point " + point};
      } else {
        auto it = p.f.find(succ);
        if (it != p.f.end() && is_prefix_str(it->second, point))
          return Violation{"c", "promise at '" + node + "' but leaf '" + succ +
                                    "' captures point " + point};
      }
    }
  }
  // (d) no promise at a child of the root for a point of A
  for (const auto& [node, point] : p.R) {
    if (node.size() == 1 && params.A.contains(point))
      return Violation{"d", "point " + point + " of A promised at child '" + node + "'"};
  }
  // (e) no promise at the root for a point of B
  for (const auto& [node, point] : p.R) {
    if (node.empty() && params.B.contains(point))
      return Violation{"e", "point " + point + " of B promised at the root"};
  }
  if (p.weight() > params.s_max)
    return Violation{"budget", "weight " + std::to_string(p.weight()) + " exceeds " +
                                   std::to_string(params.s_max)};
  return std::nullopt;
}

bool leq(const Condition& q, const Condition& p) {
  for (const auto& [leaf, stem] : p.f) {
    auto it = q.f.find(leaf);
    if (it == q.f.end() || it->second != stem) return false;
  }
  for (const auto& pair : p.R) {
    if (!q.R.count(pair)) return false;
  }
  return true;
}

MeetResult meet(const Condition& p, const Condition& q, const Template& tmpl,
                const Params& params) {
  Condition u = p;
  for (const auto& [leaf, stem] : q.f) {
    auto it = u.f.find(leaf);
    if (it != u.f.end() && it->second != stem) return {MeetResult::incompatible, std::nullopt};
    u.f[leaf] = stem;
  }
  u.R.insert(q.R.begin(), q.R.end());
  Params unbounded = params;
  unbounded.s_max = u.weight();
  if (check_condition(u, tmpl, unbounded)) return {MeetResult::incompatible, std::nullopt};
  if (u.weight() > params.s_max) return {MeetResult::budget_exceeded, std::move(u)};
  return {MeetResult::met, std::move(u)};
}

bool compatible(const Condition& p, const Condition& q, const Template& tmpl,
                const Params& params) {
  return meet(p, q, tmpl, params).status != MeetResult::incompatible;
}

// --- density ----------------------------------------------------------------

bool in_density_set(const Condition& p, const Template& tmpl, const std::string& t,
                    const std::string& x) {
  if (!tmpl.is_internal(t)) fail("SchemaError", "density sets are indexed by internal nodes");
  if (p.R.count({t, x})) return true;
  if (tmpl.rank(t) == 1) {
    for (const auto& succ : tmpl.successors(t)) {
      auto it = p.f.find(succ);
      if (it != p.f.end() && is_prefix_str(it->second, x)) return true;
    }
    return false;
  }
  for (const auto& succ : tmpl.successors(t)) {
    if (p.R.count({succ, x})) return true;
  }
  return false;
}

std::vector<Condition> single_extensions(const Condition& p, const Template& tmpl,
                                         const Params& params, std::size_t budget) {
  std::vector<Condition> out;
  if (p.weight() + 1 > budget) return out;
  Params roomy = params;
  roomy.s_max = budget;
  for (const auto& leaf : tmpl.leaves()) {
    if (p.f.count(leaf)) continue;
    for (const auto& stem : all_stems(tmpl, *params.space)) {
      Condition q = p;
      q.f[leaf] = stem;
      if (is_condition(q, tmpl, roomy)) out.push_back(std::move(q));
    }
  }
  for (const auto& node : tmpl.internal_nodes()) {
    for (const auto& point : params.space->points()) {
      if (p.R.count({node, point})) continue;
      Condition q = p;
      q.R.insert({node, point});
      if (is_condition(q, tmpl, roomy)) out.push_back(std::move(q));
    }
  }
  return out;
}

std::vector<Condition> enumerate_poset(const Template& tmpl, const Params& params) {
  std::set<Condition> seen;
  std::vector<Condition> frontier = {Condition{}};
  seen.insert(Condition{});
  while (!frontier.empty()) {
    std::vector<Condition> next;
    for (const auto& p : frontier) {
      for (auto& q : single_extensions(p, tmpl, params, params.s_max)) {
        if (seen.insert(q).second) next.push_back(std::move(q));
      }
    }
    frontier = std::move(next);
  }
  return std::vector<Condition>(seen.begin(), seen.end());
}

std::optional<Condition> find_density_extension(const Condition& p, const Template& tmpl,
                                                const Params& params, const std::string& t,
                                                const std::string& x) {
  if (in_density_set(p, tmpl, t, x)) return p;
  for (auto& q : single_extensions(p, tmpl, params, params.s_max + 1)) {
    if (in_density_set(q, tmpl, t, x)) return q;
  }
  return std::nullopt;
}

// --- generic runs --------------------------------------------------------------

std::string DenseSpec::name() const {
  if (k == promise) return "decide(" + node + ", " + point + ")";
  return "label(" + node + ")";
}

std::vector<DenseSpec> standard_dense_list(const Template& tmpl, const SpacePtr& sp) {
  std::vector<DenseSpec> out;
  auto internals = tmpl.internal_nodes();
  std::stable_sort(internals.begin(), internals.end(),
                   [](const std::string& a, const std::string& b) { return a.size() < b.size(); });
  for (const auto& t : internals) {
    for (const auto& x : sp->points()) out.push_back({DenseSpec::promise, t, x});
  }
  for (const auto& leaf : tmpl.leaves()) out.push_back({DenseSpec::leaf_total, leaf, ""});
  return out;
}

namespace {

bool in_dense(const Condition& p, const Template& tmpl, const DenseSpec& d) {
  if (d.k == DenseSpec::promise) return in_density_set(p, tmpl, d.node, d.point);
  return p.f.count(d.node) > 0;
}

}  // namespace

// The list is met in the order given: promise decisions must come before
// leaf-totality labels, since early labels can exhaust the successors a
// later promise needs.  The seed varies the choice among extensions only.
FilterState build_generic(const Template& tmpl, const Params& params,
                          std::vector<DenseSpec> dense_list, unsigned seed) {
  std::mt19937 rng(seed);
  FilterState st;
  st.accumulated = Condition{};
  st.chain.push_back(st.accumulated);
  for (const auto& d : dense_list) {
    if (in_dense(st.accumulated, tmpl, d)) continue;
    std::vector<Condition> hits;
    for (auto& q : single_extensions(st.accumulated, tmpl, params, params.s_max)) {
      if (in_dense(q, tmpl, d)) hits.push_back(std::move(q));
    }
    if (hits.empty())
      fail("Stuck", "the set " + d.name() + " is not dense below a condition of weight " +
                        std::to_string(st.accumulated.weight()));
    std::uniform_int_distribution<std::size_t> pick(0, hits.size() - 1);
    st.accumulated = hits[pick(rng)];
    st.chain.push_back(st.accumulated);
  }
  return st;
}

space::PointSet interpret_generic(const std::map<std::string, std::string>& f_G,
                                  const std::string& t, const Template& tmpl,
                                  const SpacePtr& sp) {
  if (!tmpl.is_internal(t) && !tmpl.is_leaf(t)) fail("SchemaError", "unknown template node");
  // collect the subtree below t and check leaf totality
  std::vector<std::string> missing;
  code::CodeTree codetree;
  std::function<void(const std::string&, const std::string&)> build =
      [&](const std::string& tnode, const std::string& cnode) {
        if (tmpl.is_leaf(tnode)) {
          codetree.children[cnode] = {};
          auto it = f_G.find(tnode);
          if (it == f_G.end()) {
            missing.push_back(tnode);
            codetree.labels[cnode] = "";
          } else {
            codetree.labels[cnode] = it->second;
          }
          return;
        }
        std::vector<char> kids;
        for (int v = 0; v < tmpl.b; ++v) kids.push_back(space::letter_char(v));
        codetree.children[cnode] = kids;
        for (char c : kids) build(tnode + c, cnode + c);
      };
  build(t, "");
  if (!missing.empty()) {
    std::string list;
    for (const auto& m : missing) list += (list.empty() ? "" : ", ") + m;
    fail("PartialLabels", "unlabeled leaves: " + list);
  }
  return code::interpret(codetree, sp, PointSet(sp, true));
}

// --- crank / restriction / projection -----------------------------------------

int crank(const Condition& p, const PointSet& H, const Template& tmpl) {
  int r = 0;
  for (const auto& [node, point] : p.R) {
    if (!H.contains(point)) r = std::max(r, tmpl.rank(node));
  }
  return r;
}

Condition restrict_condition(const Condition& p, const PointSet& H, int beta,
                             const Template& tmpl, const Params& params) {
  Condition r;
  r.f = p.f;
  for (const auto& pair : p.R) {
    if (H.contains(pair.second) || tmpl.rank(pair.first) <= beta) r.R.insert(pair);
  }
  // dropping promises cannot break coherence in the single-poset setting
  Params roomy = params;
  roomy.s_max = r.weight();
  if (check_condition(r, tmpl, roomy))
    fail("SchemaError", "restriction produced an incoherent condition; this is a bug");
  return r;
}

bool projection_check(const Condition& p, const PointSet& H, int beta, const Template& tmpl,
                      const Params& params, const std::vector<Condition>& poset) {
  if (beta <= 0 || beta >= tmpl.alpha)
    fail("SchemaError", "the projection law is stated for 0 < beta < alpha");
  Condition q = restrict_condition(p, H, beta, tmpl, params);
  for (const auto& r : poset) {
    if (crank(r, H, tmpl) >= beta) continue;
    if (compatible(q, r, tmpl, params) && !compatible(p, r, tmpl, params)) return false;
  }
  return true;
}

// --- linked reduction -----------------------------------------------------------

LinkedReduction linked_reduction(const Condition& p, const Template& tmpl) {
  auto internals = tmpl.internal_nodes();
  if (internals.size() > 63) fail("CapExceeded", "too many internal nodes for the encoding");
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < internals.size(); ++i) index[internals[i]] = i;
  LinkedReduction lr;
  lr.f = p.f;
  for (const auto& [node, point] : p.R) {
    lr.g[point] |= std::uint64_t{1} << index.at(node);
  }
  return lr;
}

// For individually valid conditions the merged promise sets can only break
// coherence crosswise, so it suffices to look for a promise in one whose
// successor promise sits in the other.
bool compatible_star(const Condition& p, const Condition& q, const Template& tmpl,
                     const Params&) {
  auto crosses = [&](const Condition& a, const Condition& b) {
    for (const auto& [node, point] : a.R) {
      if (tmpl.rank(node) <= 1) continue;  // successors are leaves
      for (const auto& succ : tmpl.successors(node)) {
        if (b.R.count({succ, point})) return true;
      }
    }
    return false;
  };
  return !crosses(p, q) && !crosses(q, p);
}

bool reductions_agree(const LinkedReduction& a, const LinkedReduction& b) {
  for (const auto& [point, code] : a.g) {
    auto it = b.g.find(point);
    if (it != b.g.end() && it->second != code) return false;
  }
  return true;
}

}  // namespace gbh::forcing
