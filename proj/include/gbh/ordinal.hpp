// Ordinal expressions in Cantor normal form, extended with an optional
// abstract-limit atom that records a cofinality class.  This is the exact
// arithmetic the pointclass calculus needs: sums, parity, halving, doubling,
// limit/successor tests and cofinality classification.
#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gbh/error.hpp"

namespace gbh::ord {

// Cofinality classes.  Beyond equality only two queries are meaningful:
// "is it omega" and "is it kappa".  Ordering distinct symbolic classes is
// not decidable and is deliberately not provided.
enum class CofClass { finite, omega, cof_kappa, other_lt_kappa, kappa };

std::string to_string(CofClass c);

enum class Cmp { lt, eq, gt, incomparable };

// An ordinal below epsilon_0 written as a strictly decreasing CNF sum
// w^e1*c1 + ... + w^ek*ck, optionally headed by a single abstract limit
// atom L(c).  When the atom is present the only CNF terms allowed after it
// have exponent 0, so atom-headed values are exactly of the shape L(c)+n.
// Exponents are themselves pure CNF (no atom).
class Ordinal {
 public:
  // One CNF summand w^e * c.  The exponent is boxed so the type can nest;
  // boxes are immutable and shared freely.
  class Term {
   public:
    Term(const Ordinal& e, std::uint64_t c);
    const Ordinal& exponent() const { return *exp_; }
    std::uint64_t coeff() const { return coeff_; }

   private:
    std::shared_ptr<const Ordinal> exp_;
    std::uint64_t coeff_;
    friend class Ordinal;
    friend Ordinal add(const Ordinal&, const Ordinal&);
    friend Ordinal double_of(const Ordinal&);
    friend Ordinal half(const Ordinal&);
    friend Ordinal pred(const Ordinal&);
  };

  Ordinal() = default;  // zero

  static Ordinal zero() { return Ordinal(); }
  static Ordinal finite(std::uint64_t n);
  static Ordinal omega();
  // w^e * c, e pure CNF, c >= 1.
  static Ordinal omega_pow(const Ordinal& e, std::uint64_t c = 1);
  // L(declared) + tail
  static Ordinal limit_atom(CofClass declared, std::uint64_t tail = 0);

  bool is_zero() const { return !atom_ && terms_.empty(); }
  bool has_atom() const { return atom_.has_value(); }
  CofClass atom_cof() const;

  // The finite tail n of the unique decomposition a = g + n with g limit
  // or zero.
  std::uint64_t finite_tail() const;
  bool is_finite() const;
  std::uint64_t as_finite() const;  // requires is_finite()
  bool is_successor() const { return finite_tail() > 0; }
  bool is_limit() const { return !is_zero() && finite_tail() == 0; }
  bool is_even() const { return finite_tail() % 2 == 0; }

  const std::vector<Term>& terms() const { return terms_; }

  // Structural invariant check: strictly decreasing pure-CNF exponents,
  // positive coefficients, atom-headed values of shape L(c)+n.
  bool is_normal() const;

  bool operator==(const Ordinal& o) const;
  bool operator!=(const Ordinal& o) const { return !(*this == o); }

 private:
  std::optional<CofClass> atom_;
  std::vector<Term> terms_;

  friend Ordinal add(const Ordinal&, const Ordinal&);
  friend Ordinal double_of(const Ordinal&);
  friend Ordinal half(const Ordinal&);
  friend Ordinal pred(const Ordinal&);
};

// CNF sum.  Throws UnsupportedSymbolic when the right operand is
// atom-headed and the left one is neither zero nor finite, and when the
// left operand is atom-headed and the right one is infinite (the result
// would leave the L(c)+n shape).
Ordinal add(const Ordinal& a, const Ordinal& b);

// 2*a under ordinal multiplication: g + n goes to g + 2n.
Ordinal double_of(const Ordinal& a);

// For even a = g + n returns g + n/2; throws OddOrdinal otherwise.
Ordinal half(const Ordinal& a);

// Predecessor of a successor ordinal; throws NotSuccessor on limits and 0.
Ordinal pred(const Ordinal& a);

// Cofinality class of a >= 1: successors are classified finite (callers
// substitute cof(kappa) where their convention demands it), pure-CNF limits
// are omega-cofinal, atom-headed limits report their declared class.
CofClass cofinality(const Ordinal& a);

// Total order on pure CNF.  Atom-headed values compare above every pure
// CNF value; values with the same atom compare by tail; values with
// distinct atoms are incomparable.
Cmp compare(const Ordinal& a, const Ordinal& b);

inline bool lt(const Ordinal& a, const Ordinal& b) { return compare(a, b) == Cmp::lt; }
inline bool leq(const Ordinal& a, const Ordinal& b) {
  Cmp c = compare(a, b);
  return c == Cmp::lt || c == Cmp::eq;
}

// Text grammar: `0`, naturals, `w`, `w^<expr>` (parenthesize sums in the
// exponent), `*<nat>` coefficients, `+` chains, `L(omega|cofk|oltk|kappa)`
// atoms.  Examples: "w^2*3 + w + 4", "L(cofk)+2".
Ordinal parse_ordinal(const std::string& text);
std::string to_string(const Ordinal& a);

}  // namespace gbh::ord
