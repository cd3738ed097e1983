#include "gbh/json_io.hpp"

#include <fstream>

namespace gbh::io {

namespace {

[[noreturn]] void schema_fail(const std::string& path, const std::string& msg) {
  fail("SchemaError", path + ": " + msg);
}

std::string need_string(const json& j, const std::string& path) {
  if (!j.is_string()) schema_fail(path, "expected a string");
  return j.get<std::string>();
}

int need_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) schema_fail(path, "expected an integer");
  return j.get<int>();
}

}  // namespace

pc::Situation situation_from_json(const json& j) {
  pc::Situation s;
  if (!j.is_object()) schema_fail("$", "expected an object");
  std::string kappa = need_string(j.value("kappa", json("regular")), "$.kappa");
  if (kappa == "regular") {
    s.ctx.kappa_kind = pc::CardinalContext::KappaKind::regular;
    s.ctx.cof_kappa = ord::CofClass::kappa;
  } else if (kappa == "singular") {
    s.ctx.kappa_kind = pc::CardinalContext::KappaKind::singular;
    s.ctx.cof_kappa = ord::CofClass::omega;
  } else {
    schema_fail("$.kappa", "expected regular or singular");
  }
  if (j.contains("cof_kappa")) {
    std::string c = need_string(j["cof_kappa"], "$.cof_kappa");
    if (c == "omega") s.ctx.cof_kappa = ord::CofClass::omega;
    else if (c == "oltk") s.ctx.cof_kappa = ord::CofClass::other_lt_kappa;
    else if (c == "kappa") s.ctx.cof_kappa = ord::CofClass::kappa;
    else schema_fail("$.cof_kappa", "expected omega, oltk, or kappa");
  }
  pc::validate(s.ctx);
  if (j.contains("space")) {
    if (!j["space"].is_array()) schema_fail("$.space", "expected an array of flags");
    for (std::size_t i = 0; i < j["space"].size(); ++i) {
      std::string name = need_string(j["space"][i], "$.space[" + std::to_string(i) + "]");
      auto f = pc::space_flag_from_string(name);
      if (!f) schema_fail("$.space[" + std::to_string(i) + "]", "unknown flag '" + name + "'");
      s.space.set(*f);
    }
  }
  if (j.contains("facts")) {
    if (!j["facts"].is_array()) schema_fail("$.facts", "expected an array");
    for (std::size_t i = 0; i < j["facts"].size(); ++i) {
      const json& item = j["facts"][i];
      std::string path = "$.facts[" + std::to_string(i) + "]";
      if (!item.is_object() || !item.contains("ord")) schema_fail(path, "expected {\"ord\":{...}}");
      s.facts.push_back(order_fact_from_json(item["ord"]));
    }
  }
  return s;
}

pc::OrderFact order_fact_from_json(const json& j) {
  pc::OrderFact f;
  std::string base = need_string(j.value("base", json("k+")), "$.ord.base");
  if (base == "k") f.base = pc::Base::kappa;
  else if (base == "k+") f.base = pc::Base::kappa_plus;
  else schema_fail("$.ord.base", "expected k or k+");
  std::string rel = need_string(j.value("rel", json("le")), "$.ord.rel");
  if (rel == "le") f.rel = pc::Rel::le;
  else if (rel == "gt") f.rel = pc::Rel::gt;
  else if (rel == "eq") f.rel = pc::Rel::eq;
  else schema_fail("$.ord.rel", "expected le, gt, or eq");
  if (!j.contains("bound")) schema_fail("$.ord.bound", "missing");
  f.bound = ord::parse_ordinal(need_string(j["bound"], "$.ord.bound"));
  return f;
}

json to_json(const pc::OrderFact& f) {
  return json{{"base", pc::to_string(f.base)},
              {"rel", pc::to_string(f.rel)},
              {"bound", ord::to_string(f.bound)}};
}

json to_json(const pc::Situation& s) {
  json flags = json::array();
  for (auto f : s.space.flags()) flags.push_back(pc::to_string(f));
  json facts = json::array();
  for (const auto& f : s.facts) facts.push_back(json{{"ord", to_json(f)}});
  return json{
      {"kappa", s.ctx.is_singular() ? "singular" : "regular"},
      {"cof_kappa", s.ctx.cof_kappa == ord::CofClass::omega
                        ? "omega"
                        : s.ctx.cof_kappa == ord::CofClass::other_lt_kappa ? "oltk" : "kappa"},
      {"space", flags},
      {"facts", facts}};
}

json to_json(const cal::Verdict& v) {
  json trace = json::array();
  for (const auto& step : v.trace)
    trace.push_back(json{{"rule", step.rule_id}, {"statement", step.statement}});
  json out{{"answer", cal::to_string(v.answer)}, {"trace", trace}};
  if (!v.note.empty()) out["note"] = v.note;
  return out;
}

space::SpacePtr space_from_json(const json& j, std::size_t cap) {
  if (!j.is_object()) schema_fail("$", "expected an object");
  int b = need_int(j.value("b", json(0)), "$.b");
  int d = need_int(j.value("d", json(0)), "$.d");
  std::vector<std::string> pts;
  if (!j.contains("points") || !j["points"].is_array())
    schema_fail("$.points", "expected an array");
  for (std::size_t i = 0; i < j["points"].size(); ++i)
    pts.push_back(need_string(j["points"][i], "$.points[" + std::to_string(i) + "]"));
  return space::FiniteSpace::make(b, d, std::move(pts), cap);
}

json to_json(const space::FiniteSpace& sp) {
  return json{{"b", sp.branching()}, {"d", sp.depth()}, {"points", sp.points()}};
}

json to_json(const space::PointSet& s) { return json(s.to_points()); }

code::CodeTree code_from_json(const json& j) {
  code::CodeTree c;
  if (!j.contains("nodes") || !j["nodes"].is_object()) schema_fail("$.nodes", "expected an object");
  for (const auto& [node, kids] : j["nodes"].items()) {
    if (!kids.is_array()) schema_fail("$.nodes." + node, "expected an array of letters");
    std::vector<char> letters;
    for (const auto& k : kids) {
      std::string s = need_string(k, "$.nodes." + node + "[]");
      if (s.size() != 1) schema_fail("$.nodes." + node, "child letters are single characters");
      letters.push_back(s[0]);
    }
    c.children[node] = letters;
  }
  if (j.contains("labels")) {
    for (const auto& [node, stem] : j["labels"].items())
      c.labels[node] = need_string(stem, "$.labels." + node);
  }
  code::validate(c);
  return c;
}

json to_json(const code::CodeTree& c) {
  json nodes = json::object();
  for (const auto& [node, kids] : c.children) {
    json arr = json::array();
    for (char k : kids) arr.push_back(std::string(1, k));
    nodes[node] = arr;
  }
  json labels = json::object();
  for (const auto& [node, stem] : c.labels) labels[node] = stem;
  return json{{"nodes", nodes}, {"labels", labels}};
}

json to_json(const code::SuslinTree& t) {
  json branches = json::array();
  for (const auto& br : t.branches) {
    json b = json::array();
    for (const auto& e : br) b.push_back(json::array({e.letter, e.bit, e.z}));
    branches.push_back(b);
  }
  return json{{"length", t.length}, {"branches", branches}};
}

namespace {

tree::Node parse_tree_node(const std::string& text, const tree::Alphabet& a,
                           const std::string& path) {
  tree::Node n;
  if (!a.is_product()) {
    for (char c : text) {
      int v = space::letter_value(c);
      if (v >= a.first) schema_fail(path, "letter outside the alphabet");
      n.push_back(v);
    }
    return n;
  }
  if (text.size() % 2 != 0) schema_fail(path, "product letters come in pairs");
  for (std::size_t i = 0; i < text.size(); i += 2) {
    char fc = text[i], sc = text[i + 1];
    if (fc < 'a' || fc >= 'a' + a.first) schema_fail(path, "bad first coordinate");
    int first = fc - 'a';
    int second = space::letter_value(sc);
    if (second >= a.second) schema_fail(path, "bad second coordinate");
    n.push_back(first * a.second + second);
  }
  return n;
}

std::string print_tree_node(const tree::Node& n, const tree::Alphabet& a) {
  std::string s;
  for (int l : n) {
    if (!a.is_product()) {
      s += space::letter_char(l);
    } else {
      s += static_cast<char>('a' + l / a.second);
      s += space::letter_char(l % a.second);
    }
  }
  return s;
}

}  // namespace

tree::TreeMap treemap_from_json(const json& j) {
  tree::TreeMap m;
  int sd = need_int(j.value("source_depth", json(0)), "$.source_depth");
  int sa = need_int(j.value("source_alphabet", json(0)), "$.source_alphabet");
  m.source = tree::FiniteTree::full(tree::Alphabet{sa, 0}, sd);
  int td = need_int(j.value("target_depth", json(0)), "$.target_depth");
  tree::Alphabet ta;
  if (!j.contains("target_alphabet")) schema_fail("$.target_alphabet", "missing");
  if (j["target_alphabet"].is_array()) {
    if (j["target_alphabet"].size() != 2) schema_fail("$.target_alphabet", "expected [first,second]");
    ta.first = need_int(j["target_alphabet"][0], "$.target_alphabet[0]");
    ta.second = need_int(j["target_alphabet"][1], "$.target_alphabet[1]");
  } else {
    ta.first = need_int(j["target_alphabet"], "$.target_alphabet");
    ta.second = 0;
  }
  m.target = tree::FiniteTree::full(ta, td);
  if (!j.contains("map") || !j["map"].is_object()) schema_fail("$.map", "expected an object");
  for (const auto& [src, dst] : j["map"].items()) {
    tree::Node s = parse_tree_node(src, m.source.alph, "$.map key '" + src + "'");
    tree::Node t = parse_tree_node(need_string(dst, "$.map." + src), m.target.alph,
                                   "$.map." + src);
    m.phi[s] = t;
  }
  tree::validate(m);
  return m;
}

json to_json(const tree::TreeMap& m) {
  json map = json::object();
  for (const auto& [s, t] : m.phi)
    map[print_tree_node(s, m.source.alph)] = print_tree_node(t, m.target.alph);
  json target_alphabet =
      m.target.alph.is_product()
          ? json(json::array({m.target.alph.first, m.target.alph.second}))
          : json(m.target.alph.first);
  return json{{"source_depth", m.source.depth},
              {"source_alphabet", m.source.alph.first},
              {"target_depth", m.target.depth},
              {"target_alphabet", target_alphabet},
              {"map", map}};
}

forcing::Condition condition_from_json(const json& j) {
  forcing::Condition c;
  if (j.contains("f")) {
    if (!j["f"].is_object()) schema_fail("$.f", "expected an object");
    for (const auto& [leaf, stem] : j["f"].items()) c.f[leaf] = need_string(stem, "$.f." + leaf);
  }
  if (j.contains("R")) {
    if (!j["R"].is_array()) schema_fail("$.R", "expected an array of pairs");
    for (std::size_t i = 0; i < j["R"].size(); ++i) {
      const json& pr = j["R"][i];
      std::string path = "$.R[" + std::to_string(i) + "]";
      if (!pr.is_array() || pr.size() != 2) schema_fail(path, "expected [node, point]");
      c.R.insert({need_string(pr[0], path + "[0]"), need_string(pr[1], path + "[1]")});
    }
  }
  return c;
}

json to_json(const forcing::Condition& c) {
  json f = json::object();
  for (const auto& [leaf, stem] : c.f) f[leaf] = stem;
  json R = json::array();
  for (const auto& [node, point] : c.R) R.push_back(json::array({node, point}));
  return json{{"f", f}, {"R", R}};
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("InputError", "cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    fail("ParseError", std::string("bad JSON in '") + path + "': " + e.what());
  }
  return j;
}

}  // namespace gbh::io
