#include "gbh/pointclass.hpp"

#include <cctype>

namespace gbh::pc {

std::string to_string(Kind k) {
  switch (k) {
    case Kind::Sigma: return "Sigma";
    case Kind::Pi: return "Pi";
    case Kind::Delta: return "Delta";
    case Kind::Borel: return "Borel";
  }
  return "?";
}

std::string to_string(Base b) { return b == Base::kappa ? "k" : "k+"; }

void validate(const Pointclass& p) {
  if (p.kind == Kind::Borel) {
    if (p.level) fail("SchemaError", "Borel carries no level");
    return;
  }
  if (!p.level) fail("SchemaError", "Sigma/Pi/Delta need a level");
  if (!p.level->is_normal()) fail("SchemaError", "level is not in normal form");
  if (p.level->is_zero()) fail("SchemaError", "levels start at 1");
}

void validate(const CardinalContext& ctx) {
  if (ctx.kappa_kind == CardinalContext::KappaKind::regular) {
    if (ctx.cof_kappa != ord::CofClass::kappa)
      fail("SchemaError", "a regular kappa has cofinality kappa");
  } else {
    if (ctx.cof_kappa != ord::CofClass::omega && ctx.cof_kappa != ord::CofClass::other_lt_kappa)
      fail("SchemaError", "a singular kappa has cofinality omega or some uncountable cardinal below kappa");
  }
}

std::string to_string(SpaceFlag f) {
  switch (f) {
    case SpaceFlag::regular_hausdorff_weight_le_kappa: return "regular_hausdorff_weight_le_kappa";
    case SpaceFlag::opens_are_cofk_unions_of_closed: return "opens_are_cofk_unions_of_closed";
    case SpaceFlag::subspace_of_cantor: return "subspace_of_cantor";
    case SpaceFlag::cofk_additive: return "cofk_additive";
    case SpaceFlag::has_cantor_copy: return "has_cantor_copy";
    case SpaceFlag::has_kplus_borel_embedding_of_cantor: return "has_kplus_borel_embedding_of_cantor";
    case SpaceFlag::at_most_one_nonisolated_point: return "at_most_one_nonisolated_point";
    case SpaceFlag::size_gt_kappa: return "size_gt_kappa";
  }
  return "?";
}

std::optional<SpaceFlag> space_flag_from_string(const std::string& s) {
  for (auto f : {SpaceFlag::regular_hausdorff_weight_le_kappa,
                 SpaceFlag::opens_are_cofk_unions_of_closed,
                 SpaceFlag::subspace_of_cantor,
                 SpaceFlag::cofk_additive,
                 SpaceFlag::has_cantor_copy,
                 SpaceFlag::has_kplus_borel_embedding_of_cantor,
                 SpaceFlag::at_most_one_nonisolated_point,
                 SpaceFlag::size_gt_kappa}) {
    if (to_string(f) == s) return f;
  }
  return std::nullopt;
}

std::string to_string(Rel r) {
  switch (r) {
    case Rel::le: return "le";
    case Rel::gt: return "gt";
    case Rel::eq: return "eq";
  }
  return "?";
}

Pointclass parse_pointclass(const std::string& text) {
  size_t i = 0;
  auto skip = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
  auto ident = [&] {
    skip();
    std::string r;
    while (i < text.size() && std::isalpha(static_cast<unsigned char>(text[i]))) r += text[i++];
    return r;
  };
  auto expect = [&](char c) {
    skip();
    if (i >= text.size() || text[i] != c)
      fail("ParseError", std::string("expected '") + c + "' in pointclass '" + text + "'");
    ++i;
  };
  auto base_of = [&](const std::string& b) {
    if (b == "k") return Base::kappa;
    if (b == "k+") return Base::kappa_plus;
    fail("ParseError", "unknown base '" + b + "' in '" + text + "'");
  };

  std::string head = ident();
  Pointclass p;
  if (head == "Borel") {
    p.kind = Kind::Borel;
    expect('(');
    skip();
    std::string b;
    while (i < text.size() && text[i] != ')') b += text[i++];
    expect(')');
    p.base = base_of(b);
    skip();
    if (i != text.size()) fail("ParseError", "trailing input in '" + text + "'");
    return p;
  }
  if (head == "Sigma") p.kind = Kind::Sigma;
  else if (head == "Pi") p.kind = Kind::Pi;
  else if (head == "Delta") p.kind = Kind::Delta;
  else fail("ParseError", "unknown pointclass '" + head + "'");

  expect('(');
  skip();
  if (i >= text.size() || text[i] != '0') fail("ParseError", "the superscript slot must be 0 in '" + text + "'");
  ++i;
  expect(',');
  skip();
  std::string lvl;
  int depth = 0;
  while (i < text.size() && (depth > 0 || text[i] != ',')) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')') {
      if (depth == 0) break;
      --depth;
    }
    lvl += text[i++];
  }
  expect(',');
  skip();
  std::string b;
  while (i < text.size() && text[i] != ')') {
    if (!std::isspace(static_cast<unsigned char>(text[i]))) b += text[i];
    ++i;
  }
  expect(')');
  skip();
  if (i != text.size()) fail("ParseError", "trailing input in '" + text + "'");
  p.level = ord::parse_ordinal(lvl);
  p.base = base_of(b);
  validate(p);
  return p;
}

std::string to_string(const Pointclass& p) {
  if (p.kind == Kind::Borel) return "Borel(" + to_string(p.base) + ")";
  return to_string(p.kind) + "(0," + ord::to_string(*p.level) + "," + to_string(p.base) + ")";
}

}  // namespace gbh::pc
