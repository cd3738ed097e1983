#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gbh/ordinal.hpp"

using namespace gbh::ord;

namespace {

// Independent oracle for ordinals below w^3: encode as lexicographically
// ordered triples (a,b,c) standing for w^2*a + w*b + c.
struct Triple {
  std::uint64_t a = 0, b = 0, c = 0;
};

Triple to_triple(const Ordinal& o) {
  REQUIRE(!o.has_atom());
  Triple t;
  for (const auto& term : o.terms()) {
    REQUIRE(term.exponent().is_finite());
    switch (term.exponent().as_finite()) {
      case 0: t.c = term.coeff(); break;
      case 1: t.b = term.coeff(); break;
      case 2: t.a = term.coeff(); break;
      default: FAIL("oracle only covers ordinals below w^3");
    }
  }
  return t;
}

Cmp oracle_cmp(const Ordinal& x, const Ordinal& y) {
  Triple u = to_triple(x), v = to_triple(y);
  if (u.a != v.a) return u.a < v.a ? Cmp::lt : Cmp::gt;
  if (u.b != v.b) return u.b < v.b ? Cmp::lt : Cmp::gt;
  if (u.c != v.c) return u.c < v.c ? Cmp::lt : Cmp::gt;
  return Cmp::eq;
}

Ordinal random_below_w3(std::mt19937& rng) {
  std::uniform_int_distribution<int> coin(0, 3);
  std::uniform_int_distribution<std::uint64_t> small(1, 5);
  Ordinal o;
  if (coin(rng) > 0) o = add(o, Ordinal::omega_pow(Ordinal::finite(2), small(rng)));
  if (coin(rng) > 0) o = add(o, Ordinal::omega_pow(Ordinal::finite(1), small(rng)));
  if (coin(rng) > 0) o = add(o, Ordinal::finite(small(rng)));
  return o;
}

}  // namespace

TEST_CASE("addition examples") {
  CHECK(add(Ordinal::omega(), Ordinal::finite(1)) == parse_ordinal("w+1"));
  CHECK(add(Ordinal::finite(1), Ordinal::omega()) == Ordinal::omega());
  CHECK(add(parse_ordinal("w*2+3"), parse_ordinal("w+1")) == parse_ordinal("w*3+1"));
  // identity and absorption of the atom head
  CHECK(add(Ordinal::zero(), parse_ordinal("L(cofk)+2")) == parse_ordinal("L(cofk)+2"));
  CHECK(add(Ordinal::finite(7), parse_ordinal("L(omega)")) == parse_ordinal("L(omega)"));
  CHECK(add(parse_ordinal("L(kappa)+1"), Ordinal::finite(2)) == parse_ordinal("L(kappa)+3"));
  CHECK_THROWS_AS(add(Ordinal::omega(), parse_ordinal("L(omega)")), gbh::Error);
  CHECK_THROWS_AS(add(parse_ordinal("L(omega)"), Ordinal::omega()), gbh::Error);
}

TEST_CASE("doubling and halving") {
  CHECK(double_of(parse_ordinal("w+3")) == parse_ordinal("w+6"));
  CHECK(double_of(Ordinal::finite(5)) == Ordinal::finite(10));
  CHECK(double_of(Ordinal::omega()) == Ordinal::omega());
  CHECK(half(parse_ordinal("w+4")) == parse_ordinal("w+2"));
  CHECK(half(Ordinal::finite(6)) == Ordinal::finite(3));
  CHECK(half(Ordinal::omega()) == Ordinal::omega());
  CHECK_THROWS_AS(half(parse_ordinal("w+3")), gbh::Error);
}

TEST_CASE("cofinality classes") {
  CHECK(cofinality(parse_ordinal("w+1")) == CofClass::finite);
  CHECK(cofinality(parse_ordinal("w*2")) == CofClass::omega);
  CHECK(cofinality(parse_ordinal("L(cofk)")) == CofClass::cof_kappa);
  CHECK(cofinality(parse_ordinal("w^2")) == CofClass::omega);
  CHECK_THROWS_AS(cofinality(Ordinal::zero()), gbh::Error);
}

TEST_CASE("comparison") {
  CHECK(compare(Ordinal::omega(), parse_ordinal("w+1")) == Cmp::lt);
  CHECK(compare(parse_ordinal("L(omega)+1"), parse_ordinal("w^2")) == Cmp::gt);
  CHECK(compare(parse_ordinal("L(omega)"), parse_ordinal("L(cofk)")) == Cmp::incomparable);
  CHECK(compare(parse_ordinal("L(omega)+1"), parse_ordinal("L(omega)+2")) == Cmp::lt);
  CHECK(compare(parse_ordinal("w^2*2"), parse_ordinal("w^2+w")) == Cmp::gt);
}

TEST_CASE("comparison agrees with the lexicographic oracle below w^3") {
  std::mt19937 rng(2024);
  for (int i = 0; i < 400; ++i) {
    Ordinal x = random_below_w3(rng);
    Ordinal y = random_below_w3(rng);
    CHECK(compare(x, y) == oracle_cmp(x, y));
  }
}

TEST_CASE("normality is preserved and parity alternates") {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    Ordinal x = random_below_w3(rng);
    Ordinal y = random_below_w3(rng);
    Ordinal s = add(x, y);
    CHECK(s.is_normal());
    CHECK(double_of(s).is_normal());
    Ordinal succ = add(s, Ordinal::finite(1));
    CHECK(succ.is_even() != s.is_even());
    // associativity on pure CNF
    Ordinal z = random_below_w3(rng);
    CHECK(add(add(x, y), z) == add(x, add(y, z)));
    CHECK(add(Ordinal::zero(), x) == x);
    CHECK(add(x, Ordinal::zero()) == x);
  }
}

TEST_CASE("half and double are inverse where defined") {
  std::mt19937 rng(11);
  for (int i = 0; i < 200; ++i) {
    Ordinal x = random_below_w3(rng);
    CHECK(half(double_of(x)) == x);
    if (x.is_even()) CHECK(double_of(half(x)) == x);
  }
  Ordinal lam = parse_ordinal("L(cofk)+4");
  CHECK(half(double_of(lam)) == lam);
  CHECK(double_of(half(lam)) == lam);
}

TEST_CASE("predecessor") {
  CHECK(pred(parse_ordinal("w+1")) == Ordinal::omega());
  CHECK(pred(Ordinal::finite(1)) == Ordinal::zero());
  CHECK_THROWS_AS(pred(Ordinal::omega()), gbh::Error);
}

TEST_CASE("text round-trip") {
  for (const char* s : {"0", "7", "w", "w+1", "w*3+1", "w^2*3 + w + 4", "w^w", "w^(w+1)*2",
                        "w^(w*2)", "L(cofk)+2", "L(omega)", "L(kappa)+10", "w^3*2+w^2+5"}) {
    Ordinal o = parse_ordinal(s);
    CHECK(parse_ordinal(to_string(o)) == o);
  }
  std::mt19937 rng(42);
  for (int i = 0; i < 200; ++i) {
    Ordinal o = random_below_w3(rng);
    CHECK(parse_ordinal(to_string(o)) == o);
  }
  CHECK_THROWS_AS(parse_ordinal("w^"), gbh::Error);
  CHECK_THROWS_AS(parse_ordinal("L(x)"), gbh::Error);
  CHECK_THROWS_AS(parse_ordinal("1+"), gbh::Error);
  // sums in the input are evaluated, so out-of-order summands get absorbed
  CHECK(parse_ordinal("w+w^2") == parse_ordinal("w^2"));
}
