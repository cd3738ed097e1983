#include "gbh/ordinal.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace gbh::ord {

Ordinal::Term::Term(const Ordinal& e, std::uint64_t c)
    : exp_(std::make_shared<const Ordinal>(e)), coeff_(c) {}

std::string to_string(CofClass c) {
  switch (c) {
    case CofClass::finite: return "finite";
    case CofClass::omega: return "omega";
    case CofClass::cof_kappa: return "cof_kappa";
    case CofClass::other_lt_kappa: return "other_lt_kappa";
    case CofClass::kappa: return "kappa";
  }
  return "?";
}

Ordinal Ordinal::finite(std::uint64_t n) {
  Ordinal a;
  if (n > 0) a.terms_.push_back(Term(Ordinal(), n));
  return a;
}

Ordinal Ordinal::omega() { return omega_pow(finite(1), 1); }

Ordinal Ordinal::omega_pow(const Ordinal& e, std::uint64_t c) {
  if (c == 0) fail("BadCoefficient", "coefficients must be positive");
  if (e.has_atom()) fail("UnsupportedSymbolic", "abstract atoms are not allowed in exponents");
  Ordinal a;
  if (e.is_zero()) {
    a.terms_.push_back(Term(Ordinal(), c));
  } else {
    a.terms_.push_back(Term(e, c));
  }
  return a;
}

Ordinal Ordinal::limit_atom(CofClass declared, std::uint64_t tail) {
  if (declared == CofClass::finite)
    fail("BadCofClass", "an abstract limit cannot have finite cofinality");
  Ordinal a;
  a.atom_ = declared;
  if (tail > 0) a.terms_.push_back(Term(Ordinal(), tail));
  return a;
}

CofClass Ordinal::atom_cof() const {
  if (!atom_) fail("NoAtom", "value has no abstract-limit atom");
  return *atom_;
}

std::uint64_t Ordinal::finite_tail() const {
  if (terms_.empty()) return 0;
  const Term& last = terms_.back();
  return last.exponent().is_zero() ? last.coeff() : 0;
}

bool Ordinal::is_finite() const {
  if (atom_) return false;
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_[0].exponent().is_zero();
}

std::uint64_t Ordinal::as_finite() const {
  if (!is_finite()) fail("NotFinite", "ordinal is not finite");
  return terms_.empty() ? 0 : terms_[0].coeff();
}

bool Ordinal::is_normal() const {
  for (size_t i = 0; i < terms_.size(); ++i) {
    const Term& t = terms_[i];
    if (t.coeff() == 0) return false;
    if (t.exponent().has_atom()) return false;
    if (!t.exponent().is_normal()) return false;
    if (atom_ && !t.exponent().is_zero()) return false;  // atom-headed: L(c)+n only
    if (i + 1 < terms_.size()) {
      if (compare(terms_[i + 1].exponent(), t.exponent()) != Cmp::lt) return false;
    }
  }
  return true;
}

bool Ordinal::operator==(const Ordinal& o) const {
  if (atom_ != o.atom_) return false;
  if (terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].coeff() != o.terms_[i].coeff()) return false;
    if (!(terms_[i].exponent() == o.terms_[i].exponent())) return false;
  }
  return true;
}

Ordinal add(const Ordinal& a, const Ordinal& b) {
  if (b.has_atom()) {
    // absorbed unless a is finite
    if (!a.is_finite()) fail("UnsupportedSymbolic", "cannot add an atom-headed ordinal on the right of an infinite one");
    return b;
  }
  if (a.has_atom()) {
    // a = L(c)+n; only a finite right summand keeps the representable shape
    if (!b.is_finite()) fail("UnsupportedSymbolic", "atom-headed plus an infinite ordinal leaves the representable shape");
    Ordinal r = a;
    std::uint64_t n = b.as_finite();
    if (n == 0) return r;
    if (!r.terms_.empty()) {
      r.terms_.back().coeff_ += n;
    } else {
      r.terms_.push_back(Ordinal::Term(Ordinal(), n));
    }
    return r;
  }
  if (b.is_zero()) return a;
  if (a.is_zero()) return b;
  // drop the terms of a strictly below b's leading exponent
  const Ordinal& lead = b.terms()[0].exponent();
  Ordinal r;
  for (const auto& t : a.terms()) {
    Cmp c = compare(t.exponent(), lead);
    if (c == Cmp::gt) {
      r.terms_.push_back(t);
    } else if (c == Cmp::eq) {
      r.terms_.push_back(Ordinal::Term(t.exponent(), t.coeff() + b.terms()[0].coeff()));
      for (size_t i = 1; i < b.terms().size(); ++i) r.terms_.push_back(b.terms()[i]);
      return r;
    } else {
      break;
    }
  }
  for (const auto& t : b.terms()) r.terms_.push_back(t);
  return r;
}

Ordinal double_of(const Ordinal& a) {
  Ordinal r = a;
  if (r.terms_.empty()) return r;
  Ordinal::Term& last = r.terms_.back();
  if (last.exponent().is_zero()) last.coeff_ *= 2;
  return r;
}

Ordinal half(const Ordinal& a) {
  std::uint64_t n = a.finite_tail();
  if (n % 2 != 0) fail("OddOrdinal", "finite tail is odd: " + to_string(a));
  Ordinal r = a;
  if (n == 0) return r;
  r.terms_.back().coeff_ = n / 2;
  return r;
}

Ordinal pred(const Ordinal& a) {
  if (!a.is_successor()) fail("NotSuccessor", "no predecessor: " + to_string(a));
  Ordinal r = a;
  Ordinal::Term& last = r.terms_.back();
  last.coeff_ -= 1;
  if (last.coeff() == 0) r.terms_.pop_back();
  return r;
}

CofClass cofinality(const Ordinal& a) {
  if (a.is_zero()) fail("ZeroOrdinal", "cofinality requires a >= 1");
  if (a.is_successor()) return CofClass::finite;
  if (a.has_atom()) return a.atom_cof();
  return CofClass::omega;  // every pure-CNF limit below epsilon_0
}

Cmp compare(const Ordinal& a, const Ordinal& b) {
  if (a.has_atom() || b.has_atom()) {
    if (a.has_atom() && b.has_atom()) {
      if (a.atom_cof() != b.atom_cof()) return Cmp::incomparable;
      std::uint64_t x = a.finite_tail(), y = b.finite_tail();
      return x < y ? Cmp::lt : x > y ? Cmp::gt : Cmp::eq;
    }
    // an atom abstracts a large limit: above every pure CNF value
    return a.has_atom() ? Cmp::gt : Cmp::lt;
  }
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  size_t n = std::min(ta.size(), tb.size());
  for (size_t i = 0; i < n; ++i) {
    Cmp c = compare(ta[i].exponent(), tb[i].exponent());
    if (c != Cmp::eq) return c;
    if (ta[i].coeff() != tb[i].coeff()) return ta[i].coeff() < tb[i].coeff() ? Cmp::lt : Cmp::gt;
  }
  if (ta.size() == tb.size()) return Cmp::eq;
  return ta.size() < tb.size() ? Cmp::lt : Cmp::gt;
}

namespace {

struct Parser {
  const std::string& s;
  size_t i = 0;

  explicit Parser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }

  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }

  [[noreturn]] void error(const std::string& msg) {
    fail("ParseError", msg + " at position " + std::to_string(i) + " in '" + s + "'");
  }

  std::uint64_t number() {
    skip_ws();
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) error("expected a number");
    std::uint64_t n = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      n = n * 10 + static_cast<std::uint64_t>(s[i] - '0');
      ++i;
    }
    return n;
  }

  std::string ident() {
    skip_ws();
    std::string r;
    while (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) r += s[i++];
    return r;
  }

  // term := L(cof) | w[^factor][*nat] | nat
  // expr := term (+ term)*
  Ordinal expr() {
    Ordinal acc = term();
    while (true) {
      skip_ws();
      if (!eat('+')) break;
      acc = add(acc, term());
    }
    return acc;
  }

  // exponent position: nat | bare w | ( expr ); anything richer must be
  // parenthesized so that coefficients bind to the outer term
  Ordinal factor() {
    skip_ws();
    if (eat('(')) {
      Ordinal e = expr();
      if (!eat(')')) error("expected ')'");
      return e;
    }
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) return Ordinal::finite(number());
    std::string id = ident();
    if (id == "w") return Ordinal::omega();
    error("expected an exponent");
  }

  Ordinal term() {
    skip_ws();
    if (i >= s.size()) error("expected a term");
    if (std::isdigit(static_cast<unsigned char>(s[i]))) return Ordinal::finite(number());
    std::string id = ident();
    if (id == "w") {
      Ordinal e = Ordinal::finite(1);
      if (eat('^')) e = factor();
      std::uint64_t c = 1;
      if (eat('*')) c = number();
      return Ordinal::omega_pow(e, c);
    }
    if (id == "L") {
      if (!eat('(')) error("expected '(' after L");
      std::string tag = ident();
      if (!eat(')')) error("expected ')'");
      CofClass cc;
      if (tag == "omega") cc = CofClass::omega;
      else if (tag == "cofk") cc = CofClass::cof_kappa;
      else if (tag == "oltk") cc = CofClass::other_lt_kappa;
      else if (tag == "kappa") cc = CofClass::kappa;
      else error("unknown cofinality tag '" + tag + "'");
      return Ordinal::limit_atom(cc);
    }
    error("unexpected token '" + id + "'");
  }
};

std::string cof_tag(CofClass c) {
  switch (c) {
    case CofClass::omega: return "omega";
    case CofClass::cof_kappa: return "cofk";
    case CofClass::other_lt_kappa: return "oltk";
    case CofClass::kappa: return "kappa";
    case CofClass::finite: return "finite";
  }
  return "?";
}

}  // namespace

Ordinal parse_ordinal(const std::string& text) {
  Parser p(text);
  Ordinal a = p.expr();
  p.skip_ws();
  if (p.i != text.size()) p.error("trailing input");
  if (!a.is_normal()) fail("ParseError", "expression is not in normal form: " + text);
  return a;
}

std::string to_string(const Ordinal& a) {
  if (a.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  if (a.has_atom()) {
    out << "L(" << cof_tag(a.atom_cof()) << ")";
    first = false;
  }
  for (const auto& t : a.terms()) {
    if (!first) out << " + ";
    first = false;
    if (t.exponent().is_zero()) {
      out << t.coeff();
      continue;
    }
    if (t.exponent() == Ordinal::finite(1)) {
      out << "w";
    } else if (t.exponent().is_finite()) {
      out << "w^" << to_string(t.exponent());
    } else if (t.exponent() == Ordinal::omega()) {
      out << "w^w";
    } else {
      out << "w^(" << to_string(t.exponent()) << ")";
    }
    if (t.coeff() != 1) out << "*" << t.coeff();
  }
  return out.str();
}

}  // namespace gbh::ord
