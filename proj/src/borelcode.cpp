#include "gbh/borelcode.hpp"

#include <algorithm>
#include <set>

namespace gbh::code {

using space::PointSet;
using space::SetExpr;
using space::SetExprPtr;
using space::SpacePtr;

bool CodeTree::is_leaf(const std::string& node) const {
  auto it = children.find(node);
  if (it == children.end()) fail("SchemaError", "unknown node '" + node + "'");
  return it->second.empty();
}

std::vector<std::string> CodeTree::nodes() const {
  std::vector<std::string> order;
  std::function<void(const std::string&)> walk = [&](const std::string& n) {
    order.push_back(n);
    auto it = children.find(n);
    if (it == children.end()) return;
    for (char c : it->second) walk(n + c);
  };
  if (children.count("")) walk("");
  return order;
}

CodeTree CodeTree::whole() {
  CodeTree c;
  c.children[""] = {};
  c.labels[""] = "";
  return c;
}

CodeTree CodeTree::empty_set() { return code_complement(whole()); }

void validate(const CodeTree& code) {
  if (!code.children.count("")) fail("SchemaError", "a code needs a root node \"\"");
  std::set<std::string> reach;
  for (const auto& [node, kids] : code.children) {
    // prefix closure: every proper prefix is a node listing the next letter
    for (std::size_t cut = node.size(); cut > 0; --cut) {
      std::string parent = node.substr(0, cut - 1);
      auto it = code.children.find(parent);
      if (it == code.children.end())
        fail("SchemaError", "node '" + node + "' has no parent '" + parent + "'");
      char step = node[cut - 1];
      if (std::find(it->second.begin(), it->second.end(), step) == it->second.end())
        fail("SchemaError", "node '" + parent + "' does not list child '" + step + "'");
    }
    std::set<char> uniq(kids.begin(), kids.end());
    if (uniq.size() != kids.size()) fail("SchemaError", "duplicate child letters at '" + node + "'");
    for (char c : kids) {
      if (!code.children.count(node + c))
        fail("SchemaError", "listed child '" + (node + c) + "' is missing");
    }
    if (kids.empty()) {
      if (!code.labels.count(node)) fail("SchemaError", "leaf '" + node + "' is unlabeled");
    } else {
      if (code.labels.count(node)) fail("SchemaError", "internal node '" + node + "' is labeled");
    }
  }
  for (const auto& [node, stem] : code.labels) {
    (void)stem;
    if (!code.children.count(node)) fail("SchemaError", "label on unknown node '" + node + "'");
  }
}

std::map<std::string, int> rank(const CodeTree& code) {
  std::map<std::string, int> r;
  std::function<int(const std::string&)> rec = [&](const std::string& n) -> int {
    const auto& kids = code.children.at(n);
    int v = 0;
    for (char c : kids) v = std::max(v, rec(n + c) + 1);
    r[n] = v;
    return v;
  };
  rec("");
  return r;
}

int root_rank(const CodeTree& code) { return rank(code).at(""); }

namespace {

PointSet interpret_node(const CodeTree& code, const std::string& node, const SpacePtr& sp,
                        const PointSet& X) {
  const auto& kids = code.children.at(node);
  if (kids.empty()) return space::basic(sp, code.labels.at(node)).intersect(X);
  PointSet acc = X;
  for (char c : kids) {
    PointSet child = interpret_node(code, node + c, sp, X);
    acc = acc.intersect(X.intersect(child.complement()));
  }
  return acc;
}

SetExprPtr unfold_node(const CodeTree& code, const std::string& node, const SpacePtr& sp,
                       const PointSet& X) {
  const auto& kids = code.children.at(node);
  auto xlit = SetExpr::lit(X);
  if (kids.empty())
    return SetExpr::intersect({SetExpr::lit(space::basic(sp, code.labels.at(node))), xlit});
  std::vector<SetExprPtr> parts;
  for (char c : kids) {
    parts.push_back(
        SetExpr::intersect({xlit, SetExpr::negate(unfold_node(code, node + c, sp, X))}));
  }
  return SetExpr::intersect(std::move(parts));
}

}  // namespace

PointSet interpret(const CodeTree& code, const SpacePtr& sp, const PointSet& X) {
  validate(code);
  for (const auto& [node, stem] : code.labels) {
    (void)node;
    space::validate_stem(*sp, stem);
  }
  return interpret_node(code, "", sp, X);
}

SetExprPtr unfold(const CodeTree& code, const SpacePtr& sp, const PointSet& X) {
  validate(code);
  return unfold_node(code, "", sp, X);
}

namespace {

// fresh single letters for children of a rebuilt node
char letter_at(std::size_t i) {
  static const char* alphabet = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ";
  if (i >= 52) fail("CapExceeded", "more than 52 children in a combinator");
  return alphabet[i];
}

// copy `src` rooted at src_node into `dst` rooted at dst_node
void graft(CodeTree& dst, const std::string& dst_node, const CodeTree& src,
           const std::string& src_node) {
  const auto& kids = src.children.at(src_node);
  dst.children[dst_node] = kids;
  if (kids.empty()) {
    dst.labels[dst_node] = src.labels.at(src_node);
    return;
  }
  for (char c : kids) graft(dst, dst_node + c, src, src_node + c);
}

}  // namespace

CodeTree code_complement(const CodeTree& code) {
  validate(code);
  CodeTree r;
  r.children[""] = {'a'};
  graft(r, "a", code, "");
  return r;
}

CodeTree code_union(const std::vector<CodeTree>& codes) {
  if (codes.empty()) return CodeTree::empty_set();
  // the union is the complement of the intersection-of-complements node
  CodeTree inner;
  inner.children[""] = {};
  for (std::size_t i = 0; i < codes.size(); ++i) {
    validate(codes[i]);
    char c = letter_at(i);
    inner.children[""].push_back(c);
    graft(inner, std::string(1, c), codes[i], "");
  }
  return code_complement(inner);
}

CodeTree code_intersection(const std::vector<CodeTree>& codes) {
  if (codes.empty()) return CodeTree::whole();
  // stems intersect directly when one extends the other
  bool all_leaves = true;
  for (const auto& c : codes) {
    validate(c);
    if (!c.is_leaf("")) all_leaves = false;
  }
  if (all_leaves) {
    std::string longest = codes[0].labels.at("");
    bool compatible = true;
    for (const auto& c : codes) {
      const std::string& s = c.labels.at("");
      const std::string& a = s.size() < longest.size() ? s : longest;
      const std::string& b = s.size() < longest.size() ? longest : s;
      if (b.compare(0, a.size(), a) != 0) {
        compatible = false;
        break;
      }
      if (s.size() > longest.size()) longest = s;
    }
    if (!compatible) return CodeTree::empty_set();
    CodeTree r;
    r.children[""] = {};
    r.labels[""] = longest;
    return r;
  }
  // intersection = one node over the children of internal arguments,
  // grafting leaf arguments behind a single complement wrapper
  CodeTree r;
  r.children[""] = {};
  std::size_t next = 0;
  for (const auto& c : codes) {
    if (c.is_leaf("")) {
      char l = letter_at(next++);
      r.children[""].push_back(l);
      // complement-of-leaf: the double complement restores the leaf set
      CodeTree wrapped = code_complement(c);
      graft(r, std::string(1, l), wrapped, "");
    } else {
      for (char kid : c.children.at("")) {
        char l = letter_at(next++);
        r.children[""].push_back(l);
        graft(r, std::string(1, l), c, std::string(1, kid));
      }
    }
  }
  return r;
}

// --- canonical tree -------------------------------------------------------

SuslinTree canonical_tree(const CodeTree& code, const SpacePtr& sp, const PointSet& X,
                          std::size_t node_cap) {
  validate(code);
  std::vector<std::string> order = code.nodes();
  if (order.size() > node_cap)
    fail("CapExceeded", "code has " + std::to_string(order.size()) + " nodes, cap is " +
                            std::to_string(node_cap));
  if (order.size() >= 20) fail("CapExceeded", "assignment space too large");

  std::map<std::string, int> index;
  for (std::size_t i = 0; i < order.size(); ++i) index[order[i]] = static_cast<int>(i);

  SuslinTree tree;
  tree.space = sp;
  tree.length = std::max<std::size_t>(static_cast<std::size_t>(sp->depth()), order.size());

  const std::size_t n = order.size();
  for (std::size_t pi = 0; pi < sp->size(); ++pi) {
    if (!X.contains(static_cast<int>(pi))) continue;
    const std::string& x = sp->points()[pi];
    for (std::size_t y = 0; y < (std::size_t{1} << n); ++y) {
      auto bit = [&](std::size_t i) { return ((y >> i) & 1u) != 0; };
      if (!bit(0)) continue;  // y at the root must be 1
      bool ok = true;
      for (std::size_t i = 0; i < n && ok; ++i) {
        const std::string& node = order[i];
        const auto& kids = code.children.at(node);
        if (kids.empty()) {
          // leaf: y = 1 iff the point lies in the labeled basic set
          const std::string& stem = code.labels.at(node);
          space::validate_stem(*sp, stem);
          bool in = x.compare(0, stem.size(), stem) == 0;
          if (bit(i) != in) ok = false;
        } else {
          bool some_child = false;
          for (char c : kids) {
            if (bit(static_cast<std::size_t>(index.at(node + c)))) some_child = true;
          }
          if ((bit(i) == false) != some_child) ok = false;
        }
      }
      if (!ok) continue;
      // expand every admissible witness assignment
      std::vector<std::vector<int>> choices(n);
      for (std::size_t i = 0; i < n; ++i) {
        const std::string& node = order[i];
        const auto& kids = code.children.at(node);
        if (!kids.empty() && !bit(i)) {
          for (char c : kids) {
            int ci = index.at(node + c);
            if (bit(static_cast<std::size_t>(ci))) choices[i].push_back(ci);
          }
        } else {
          choices[i] = {0};  // unused witness: the root node
        }
      }
      std::vector<int> z(n, 0);
      std::function<void(std::size_t)> emit = [&](std::size_t i) {
        if (i == n) {
          std::vector<SuslinTree::Entry> branch(tree.length);
          for (std::size_t k = 0; k < tree.length; ++k) {
            SuslinTree::Entry e;
            e.letter = k < x.size() ? space::letter_value(x[k]) : 0;
            e.bit = k < n ? (bit(k) ? 1 : 0) : 0;
            e.z = k < n ? z[k] : 0;
            branch[k] = e;
          }
          tree.branches.push_back(std::move(branch));
          return;
        }
        for (int w : choices[i]) {
          z[i] = w;
          emit(i + 1);
        }
      };
      emit(0);
    }
  }
  std::sort(tree.branches.begin(), tree.branches.end());
  tree.branches.erase(std::unique(tree.branches.begin(), tree.branches.end()),
                      tree.branches.end());
  return tree;
}

PointSet project(const SuslinTree& tree) {
  PointSet r(tree.space);
  for (const auto& branch : tree.branches) {
    std::string x;
    for (int k = 0; k < tree.space->depth(); ++k)
      x += space::letter_char(branch[static_cast<std::size_t>(k)].letter);
    int idx = tree.space->index_of(x);
    if (idx >= 0) r.add(idx);
  }
  return r;
}

}  // namespace gbh::code
