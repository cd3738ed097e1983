// gbh: command-line front end for the pointclass calculus and the finite
// verification labs.  Exit codes: 0 holds/success, 1 fails, 2 unknown,
// 3 input error.
#include <chrono>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "gbh/borelcode.hpp"
#include "gbh/calculus.hpp"
#include "gbh/forcing.hpp"
#include "gbh/json_io.hpp"
#include "gbh/space.hpp"
#include "gbh/treemap.hpp"
#include "gbh/verify.hpp"

namespace {

using namespace gbh;

constexpr int kHolds = 0;
constexpr int kFails = 1;
constexpr int kUnknown = 2;
constexpr int kInputError = 3;

struct Output {
  bool timing = true;
  bool json = false;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  void time_line() const {
    if (!timing) return;
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                    .count();
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", ms);
    std::cout << "time: " << buf << "ms\n";
  }
};

int report_verdict(const std::string& query, const cal::Verdict& v, const Output& out) {
  if (out.json) {
    io::json j = io::to_json(v);
    j["query"] = query;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "query: " << query << "\n";
    std::cout << "verdict: " << cal::to_string(v.answer) << "\n";
    for (const auto& step : v.trace)
      std::cout << "  [" << step.rule_id << "] " << step.statement << "\n";
    if (!v.note.empty()) std::cout << "note: " << v.note << "\n";
    out.time_line();
  }
  switch (v.answer) {
    case cal::Answer::holds: return kHolds;
    case cal::Answer::fails: return kFails;
    case cal::Answer::unknown: return kUnknown;
  }
  return kUnknown;
}

pc::Situation load_situation(const std::string& path) {
  if (path.empty()) return pc::Situation{};
  return io::situation_from_json(io::load_json_file(path));
}

std::vector<std::string> split_points(const std::string& csv) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : csv) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::vector<cal::Evidence> load_evidence(const std::string& path) {
  std::vector<cal::Evidence> out;
  if (path.empty()) return out;
  io::json j = io::load_json_file(path);
  if (!j.is_array()) fail("SchemaError", "$: evidence is an array");
  for (const auto& item : j) {
    if (item.contains("eq")) {
      if (!item["eq"].is_array() || item["eq"].size() != 2)
        fail("SchemaError", "$.eq: expected two pointclass expressions");
      out.push_back(cal::ClassEq{pc::parse_pointclass(item["eq"][0].get<std::string>()),
                                 pc::parse_pointclass(item["eq"][1].get<std::string>())});
    } else if (item.contains("closure")) {
      const auto& c = item["closure"];
      cal::ClosureFact cf;
      cf.p = pc::parse_pointclass(c.at("class").get<std::string>());
      std::string op = c.at("op").get<std::string>();
      if (op == "union") cf.op = cal::SetOp::union_;
      else if (op == "intersection") cf.op = cal::SetOp::intersection;
      else fail("SchemaError", "$.closure.op: union or intersection");
      cf.size = cal::parse_size(c.at("size").get<std::string>());
      out.push_back(cf);
    } else if (item.contains("ord")) {
      out.push_back(io::order_fact_from_json(item["ord"]));
    } else {
      fail("SchemaError", "evidence items are eq, closure, or ord objects");
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pointclass calculus and finite hierarchy labs"};
  app.require_subcommand(1);
  Output out;
  bool no_timing = false;
  bool as_json = false;
  app.add_flag("--no-timing", no_timing, "suppress the time line for byte-stable output");
  app.add_flag("--json", as_json, "emit verdicts as JSON with the trace array");

  // ---- ord ----------------------------------------------------------------
  auto* ord_cmd = app.add_subcommand("ord", "ordinal arithmetic");
  std::string ord_op, ord_a, ord_b;
  ord_cmd->add_option("op", ord_op, "half|double|add|cof|cmp|parse")->required();
  ord_cmd->add_option("a", ord_a, "ordinal expression")->required();
  ord_cmd->add_option("b", ord_b, "second ordinal expression");

  // ---- pointclass ----------------------------------------------------------
  auto* pcl = app.add_subcommand("pointclass", "calculus queries");
  std::string pc_op, pc_a, pc_b, pc_ctx, pc_clop, pc_size, pc_rel = "le", pc_bound, pc_base = "k+",
                                                           pc_evidence, pc_target;
  bool pc_hausdorff = false, pc_two_points = false;
  pcl->add_option("op", pc_op,
                  "normalize|dual|compare|closure|universal|translate-order|collapse|function-order")
      ->required();
  pcl->add_option("a", pc_a, "pointclass expression");
  pcl->add_option("b", pc_b, "second pointclass expression");
  pcl->add_option("--ctx", pc_ctx, "situation JSON file");
  pcl->add_option("--op-kind", pc_clop, "closure operation: union|intersection|complement");
  pcl->add_option("--size", pc_size, "closure size, e.g. '<cofk', 'kappa', '3'");
  pcl->add_option("--rel", pc_rel, "order fact relation: le|gt|eq");
  pcl->add_option("--bound", pc_bound, "order fact bound (ordinal expression)");
  pcl->add_option("--base", pc_base, "order fact base: k|k+");
  pcl->add_option("--target", pc_target, "collapse target level");
  pcl->add_option("--evidence", pc_evidence, "evidence JSON file for collapse");
  pcl->add_flag("--hausdorff", pc_hausdorff, "target space is Hausdorff");
  pcl->add_flag("--two-points", pc_two_points, "target space has at least two points");

  // ---- space -----------------------------------------------------------------
  auto* sp_cmd = app.add_subcommand("space", "finite space operations");
  std::string sp_op, sp_file, sp_stem, sp_basis;
  int sp_level = 1;
  std::size_t sp_slices = 1;
  std::size_t cap_points = space::kDefaultPointCap;
  std::size_t cap_params = space::kDefaultParamCap;
  sp_cmd->add_option("op", sp_op, "basic|embed|universal")->required();
  sp_cmd->add_option("--space", sp_file, "space JSON file")->required();
  sp_cmd->add_option("--stem", sp_stem, "stem for basic");
  sp_cmd->add_option("--basis", sp_basis, "basis JSON file: array of point arrays");
  sp_cmd->add_option("--level", sp_level, "universal level: 1 or 2");
  sp_cmd->add_option("--slices", sp_slices, "slice count for level 2");
  app.add_option("--cap", cap_points, "override the point-count cap");
  app.add_option("--param-cap", cap_params, "override the parameter-row cap");

  // ---- code ---------------------------------------------------------------------
  auto* code_cmd = app.add_subcommand("code", "code-tree operations");
  std::string code_op, code_file, code_space, code_set;
  code_cmd->add_option("op", code_op, "rank|interpret|canonical")->required();
  code_cmd->add_option("--code", code_file, "code JSON file")->required();
  code_cmd->add_option("--space", code_space, "space JSON file");
  code_cmd->add_option("--set", code_set, "comma-separated points of X; all when omitted");

  // ---- embed ----------------------------------------------------------------------
  auto* emb = app.add_subcommand("embed", "tree-map checks");
  std::string emb_op, emb_file;
  emb->add_option("op", emb_op, "props|perfect|body|closed-image")->required();
  emb->add_option("--map", emb_file, "tree map JSON file")->required();

  // ---- forcing ---------------------------------------------------------------------
  auto* fc = app.add_subcommand("forcing", "forcing poset laboratory");
  std::string fc_op, fc_cond, fc_space, fc_A, fc_B, fc_H, fc_node, fc_point;
  int fc_alpha = 2, fc_b = 3, fc_d = 2, fc_beta = 1;
  std::size_t fc_smax = 2;
  unsigned fc_seed = 7;
  fc->add_option("op", fc_op, "check|density|generic|project|link")->required();
  fc->add_option("--alpha", fc_alpha, "template height (>= 2)");
  fc->add_option("--b", fc_b, "branching of template and space");
  fc->add_option("--d", fc_d, "stem depth of the space");
  fc->add_option("--smax", fc_smax, "condition weight budget");
  fc->add_option("--seed", fc_seed, "seed for generic runs");
  fc->add_option("--space", fc_space, "space JSON file; the full grid when omitted");
  fc->add_option("--points", fc_point, "comma-separated points when no space file is given");
  fc->add_option("--cond", fc_cond, "condition JSON file");
  fc->add_option("--A", fc_A, "comma-separated points of A");
  fc->add_option("--B", fc_B, "comma-separated points of B");
  fc->add_option("--H", fc_H, "comma-separated points of the exempt set");
  fc->add_option("--beta", fc_beta, "restriction cutoff");
  fc->add_option("--node", fc_node, "density node");

  // ---- verify ------------------------------------------------------------------------
  auto* vf = app.add_subcommand("verify", "run the acceptance criteria");
  std::string vf_what = "all";
  unsigned vf_seed = 7;
  vf->add_option("what", vf_what, "'all' or a criterion number 1..10");
  vf->add_option("--seed", vf_seed, "seed for the sampled suites");

  CLI11_PARSE(app, argc, argv);
  out.timing = !no_timing;
  out.json = as_json;

  try {
    // ---------------- ord ----------------
    if (ord_cmd->parsed()) {
      using namespace ord;
      if (ord_op == "half") {
        std::cout << to_string(half(parse_ordinal(ord_a))) << "\n";
      } else if (ord_op == "double") {
        std::cout << to_string(double_of(parse_ordinal(ord_a))) << "\n";
      } else if (ord_op == "add") {
        if (ord_b.empty()) fail("InputError", "add needs two expressions");
        std::cout << to_string(add(parse_ordinal(ord_a), parse_ordinal(ord_b))) << "\n";
      } else if (ord_op == "cof") {
        std::cout << to_string(cofinality(parse_ordinal(ord_a))) << "\n";
      } else if (ord_op == "cmp") {
        if (ord_b.empty()) fail("InputError", "cmp needs two expressions");
        switch (compare(parse_ordinal(ord_a), parse_ordinal(ord_b))) {
          case Cmp::lt: std::cout << "lt\n"; break;
          case Cmp::eq: std::cout << "eq\n"; break;
          case Cmp::gt: std::cout << "gt\n"; break;
          case Cmp::incomparable: std::cout << "incomparable\n"; break;
        }
      } else if (ord_op == "parse") {
        std::cout << to_string(parse_ordinal(ord_a)) << "\n";
      } else {
        fail("InputError", "unknown ord operation '" + ord_op + "'");
      }
      return kHolds;
    }

    // ---------------- pointclass ----------------
    if (pcl->parsed()) {
      pc::Situation sit = load_situation(pc_ctx);
      if (pc_op == "normalize") {
        try {
          std::cout << pc::to_string(cal::normalize(pc::parse_pointclass(pc_a), sit)) << "\n";
          return kHolds;
        } catch (const MissingAssumption& e) {
          std::cout << "unknown: missing " << e.what() << "\n";
          return kUnknown;
        }
      }
      if (pc_op == "dual") {
        std::cout << pc::to_string(cal::dual(pc::parse_pointclass(pc_a))) << "\n";
        return kHolds;
      }
      if (pc_op == "compare") {
        cal::Verdict v = cal::compare(pc::parse_pointclass(pc_a), pc::parse_pointclass(pc_b), sit);
        return report_verdict(pc_a + " included in " + pc_b, v, out);
      }
      if (pc_op == "closure") {
        cal::SetOp op;
        if (pc_clop == "union") op = cal::SetOp::union_;
        else if (pc_clop == "intersection") op = cal::SetOp::intersection;
        else if (pc_clop == "complement") op = cal::SetOp::complement;
        else fail("InputError", "--op-kind must be union, intersection, or complement");
        std::optional<cal::SizeBound> size;
        if (!pc_size.empty()) size = cal::parse_size(pc_size);
        cal::Verdict v = cal::closure(pc::parse_pointclass(pc_a), op, size, sit);
        return report_verdict(pc_a + " closed under " + pc_clop +
                                  (pc_size.empty() ? "" : " of size " + pc_size),
                              v, out);
      }
      if (pc_op == "universal") {
        cal::Verdict v = cal::universal_exists(pc::parse_pointclass(pc_a), sit);
        return report_verdict("universal set for " + pc_a, v, out);
      }
      if (pc_op == "translate-order") {
        pc::OrderFact f;
        f.rel = pc_rel == "le" ? pc::Rel::le : pc_rel == "gt" ? pc::Rel::gt : pc::Rel::eq;
        f.bound = ord::parse_ordinal(pc_bound);
        f.base = pc_base == "k" ? pc::Base::kappa : pc::Base::kappa_plus;
        try {
          pc::OrderFact t = cal::translate_order(f, sit);
          std::cout << io::to_json(t).dump() << "\n";
          return kHolds;
        } catch (const MissingAssumption& e) {
          std::cout << "unknown: missing " << e.what() << "\n";
          return kUnknown;
        }
      }
      if (pc_op == "collapse") {
        auto evidence = load_evidence(pc_evidence);
        cal::Verdict v = cal::collapse_criteria(
            evidence, ord::parse_ordinal(pc_target),
            pc_base == "k" ? pc::Base::kappa : pc::Base::kappa_plus, sit);
        return report_verdict("order at " + pc_base + " bounded by " + pc_target, v, out);
      }
      if (pc_op == "function-order") {
        pc::OrderFact f;
        f.rel = pc_rel == "le" ? pc::Rel::le : pc_rel == "gt" ? pc::Rel::gt : pc::Rel::eq;
        f.bound = ord::parse_ordinal(pc_bound);
        f.base = pc::Base::kappa_plus;
        try {
          std::cout << io::to_json(cal::function_hierarchy_order(f, pc_hausdorff, pc_two_points))
                           .dump()
                    << "\n";
          return kHolds;
        } catch (const MissingAssumption& e) {
          std::cout << "unknown: missing " << e.what() << "\n";
          return kUnknown;
        }
      }
      fail("InputError", "unknown pointclass operation '" + pc_op + "'");
    }

    // ---------------- space ----------------
    if (sp_cmd->parsed()) {
      auto sp = io::space_from_json(io::load_json_file(sp_file), cap_points);
      if (sp_op == "basic") {
        std::cout << io::to_json(space::basic(sp, sp_stem)).dump() << "\n";
        return kHolds;
      }
      auto load_basis = [&]() {
        std::vector<space::PointSet> basis;
        io::json j = io::load_json_file(sp_basis);
        for (const auto& arr : j)
          basis.emplace_back(sp, arr.get<std::vector<std::string>>());
        return basis;
      };
      if (sp_op == "embed") {
        auto rows = space::embed_into_cantor(sp, load_basis());
        io::json outj = io::json::array();
        for (const auto& row : rows) {
          std::string bits;
          for (bool b : row) bits += b ? '1' : '0';
          outj.push_back(bits);
        }
        std::cout << outj.dump() << "\n";
        return kHolds;
      }
      if (sp_op == "universal") {
        auto u = space::UniversalRelation::build(sp_level, sp, load_basis(), sp_slices,
                                                 cap_params);
        io::json outj;
        outj["level"] = u.level();
        outj["param_length"] = u.param_length();
        io::json sections = io::json::array();
        for (const auto& s : u.all_sections()) sections.push_back(io::to_json(s));
        outj["sections"] = sections;
        std::cout << outj.dump() << "\n";
        return kHolds;
      }
      fail("InputError", "unknown space operation '" + sp_op + "'");
    }

    // ---------------- code ----------------
    if (code_cmd->parsed()) {
      code::CodeTree c = io::code_from_json(io::load_json_file(code_file));
      if (code_op == "rank") {
        io::json outj = io::json::object();
        for (const auto& [node, r] : code::rank(c)) outj[node] = r;
        std::cout << outj.dump() << "\n";
        return kHolds;
      }
      auto sp = io::space_from_json(io::load_json_file(code_space), cap_points);
      space::PointSet X = code_set.empty() ? space::PointSet(sp, true)
                                           : space::PointSet(sp, split_points(code_set));
      if (code_op == "interpret") {
        std::cout << io::to_json(code::interpret(c, sp, X)).dump() << "\n";
        return kHolds;
      }
      if (code_op == "canonical") {
        code::SuslinTree t = code::canonical_tree(c, sp, X);
        io::json outj = io::to_json(t);
        outj["projection"] = io::to_json(code::project(t));
        std::cout << outj.dump() << "\n";
        return kHolds;
      }
      fail("InputError", "unknown code operation '" + code_op + "'");
    }

    // ---------------- embed ----------------
    if (emb->parsed()) {
      tree::TreeMap m = io::treemap_from_json(io::load_json_file(emb_file));
      if (emb_op == "props") {
        tree::OrderProps p = tree::check_order_props(m);
        io::json outj{{"order_preserving", p.order_preserving},
                      {"strict", p.strict},
                      {"preserves_incompatibility", p.preserves_incompatibility},
                      {"order_embedding", p.order_embedding}};
        std::cout << outj.dump() << "\n";
        return kHolds;
      }
      if (emb_op == "perfect") {
        auto r = tree::check_exists_perfect(m);
        std::cout << (r.value ? "true" : "false") << "\n";
        return r.value ? kHolds : kFails;
      }
      if (emb_op == "body") {
        auto f = tree::body_map(m);
        io::json outj = io::json::object();
        for (const auto& [x, fx] : f) {
          std::string k, v;
          for (int l : x) k += space::letter_char(l);
          for (int l : fx)
            v += m.target.alph.is_product()
                     ? std::string(1, static_cast<char>('a' + l / m.target.alph.second)) +
                           space::letter_char(l % m.target.alph.second)
                     : std::string(1, space::letter_char(l));
          outj[k] = v;
        }
        std::cout << outj.dump() << "\n";
        return kHolds;
      }
      if (emb_op == "closed-image") {
        bool ok = tree::closed_image_check(m);
        std::cout << (ok ? "true" : "false") << "\n";
        return ok ? kHolds : kFails;
      }
      fail("InputError", "unknown embed operation '" + emb_op + "'");
    }

    // ---------------- forcing ----------------
    if (fc->parsed()) {
      forcing::Template tmpl{fc_alpha, fc_b};
      forcing::validate(tmpl);
      space::SpacePtr sp;
      if (!fc_space.empty()) sp = io::space_from_json(io::load_json_file(fc_space), cap_points);
      else if (!fc_point.empty()) sp = space::FiniteSpace::make(fc_b, fc_d, split_points(fc_point), cap_points);
      else sp = space::FiniteSpace::full(fc_b, fc_d, cap_points);
      forcing::Params params{sp, space::PointSet(sp, split_points(fc_A)),
                             space::PointSet(sp, split_points(fc_B)), fc_smax};
      if (!params.A.intersect(params.B).empty())
        fail("InputError", "A and B must be disjoint");

      if (fc_op == "check") {
        forcing::Condition c = io::condition_from_json(io::load_json_file(fc_cond));
        auto v = forcing::check_condition(c, tmpl, params);
        if (!v) {
          std::cout << "valid\n";
          return kHolds;
        }
        std::cout << "invalid: clause " << v->clause << ": " << v->detail << "\n";
        return kFails;
      }
      if (fc_op == "density") {
        // the fresh-successor headroom the density argument needs
        if (static_cast<std::size_t>(fc_b) < fc_smax + 1)
          fail("InputError",
               "density needs branching of at least the budget plus one; refusing");
        auto poset = forcing::enumerate_poset(tmpl, params);
        for (const auto& p : poset) {
          for (const auto& t : tmpl.internal_nodes()) {
            for (const auto& x : sp->points()) {
              if (!forcing::find_density_extension(p, tmpl, params, t, x)) {
                std::cout << "not dense at (" << t << ", " << x << ")\n";
                return kFails;
              }
            }
          }
        }
        std::cout << "dense: all promise sets over " << poset.size() << " conditions\n";
        out.time_line();
        return kHolds;
      }
      if (fc_op == "generic") {
        forcing::FilterState st =
            forcing::build_generic(tmpl, params, forcing::standard_dense_list(tmpl, sp), fc_seed);
        io::json outj = io::to_json(st.accumulated);
        outj["chain_length"] = st.chain.size();
        outj["root_set"] = io::to_json(forcing::interpret_generic(st.accumulated.f, "", tmpl, sp));
        std::cout << outj.dump() << "\n";
        return kHolds;
      }
      if (fc_op == "project") {
        forcing::Condition c = io::condition_from_json(io::load_json_file(fc_cond));
        space::PointSet H(sp, split_points(fc_H));
        auto poset = forcing::enumerate_poset(tmpl, params);
        bool ok = forcing::projection_check(c, H, fc_beta, tmpl, params, poset);
        std::cout << (ok ? "true" : "false") << "\n";
        return ok ? kHolds : kFails;
      }
      if (fc_op == "link") {
        forcing::Condition c = io::condition_from_json(io::load_json_file(fc_cond));
        auto lr = forcing::linked_reduction(c, tmpl);
        io::json g = io::json::object();
        for (const auto& [pt, codeval] : lr.g) g[pt] = codeval;
        io::json outj{{"f", io::to_json(c)["f"]}, {"g", g}};
        std::cout << outj.dump() << "\n";
        return kHolds;
      }
      fail("InputError", "unknown forcing operation '" + fc_op + "'");
    }

    // ---------------- verify ----------------
    if (vf->parsed()) {
      if (vf_what == "all") {
        bool ok = verify::run_all(vf_seed, std::cout);
        return ok ? kHolds : kFails;
      }
      int idx = std::stoi(vf_what);
      auto r = verify::run_criterion(idx, vf_seed);
      std::cout << "criterion " << r.index << " (" << r.name << "): "
                << (r.pass ? "PASS" : "FAIL") << " " << r.detail << "\n";
      return r.pass ? kHolds : kFails;
    }
  } catch (const MissingAssumption& e) {
    std::cout << "unknown: missing " << e.what() << "\n";
    return kUnknown;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
