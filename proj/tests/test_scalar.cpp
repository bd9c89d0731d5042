#include <random>

#include "doctest.h"
#include "nk/scalar.hpp"

using namespace nk;

namespace {

// cos/sin pair (c,s), unit triple (a,b,u), free atoms t (plain) and r (nonzero)
RingPtr test_ring() {
  RingBuilder rb;
  rb.add_pair("c", "s", true, false);
  rb.add_triple("a", "b", "u");
  rb.add_atom("t");
  rb.add_atom("r", true);
  return rb.freeze();
}

Scalar random_scalar(const RingPtr& ring, std::mt19937& rng, int terms = 3) {
  std::uniform_int_distribution<int> coef(-4, 4);
  std::uniform_int_distribution<int> expd(0, 2);
  Scalar acc = ring->constant(Rat(0));
  for (int i = 0; i < terms; ++i) {
    Scalar term = ring->constant(Rat(coef(rng)));
    for (SymId s = 0; s < static_cast<SymId>(ring->size()); ++s)
      term = term * ring->sym(s).pow(expd(rng));
    acc = acc + term;
  }
  return acc;
}

}  // namespace

TEST_CASE("normal form rewrites") {
  auto R = test_ring();
  Scalar c = R->sym("c"), s = R->sym("s");
  Scalar a = R->sym("a"), b = R->sym("b"), u = R->sym("u");

  // s^2 -> 1 - c^2
  CHECK(s * s == R->constant(Rat(1)) - c * c);
  // s^3 -> s - s*c^2
  CHECK(s.pow(3) == s - s * c * c);
  // third triple member: u^2 -> 1 - a^2 - b^2
  CHECK(u * u == R->constant(Rat(1)) - a * a - b * b);
  // Pythagoras collapses to 1
  CHECK(c * c + s * s == R->constant(Rat(1)));
}

TEST_CASE("units and division") {
  auto R = test_ring();
  Scalar c = R->sym("c"), s = R->sym("s"), t = R->sym("t"), r = R->sym("r");

  Scalar sec = R->constant(Rat(1)) / c;
  CHECK(sec.den().exp(R->find("c")) == 1);
  CHECK(sec * c == R->constant(Rat(1)));

  CHECK(r.is_unit());
  CHECK((R->constant(Rat(3)) * r * c).is_unit());
  CHECK(!t.is_unit());
  CHECK(!s.is_unit());
  CHECK(!(c + r).is_unit());
  CHECK_THROWS_AS((void)(c / t), std::domain_error);
  CHECK_THROWS_AS((void)(c / (c + r)), std::domain_error);
  CHECK_THROWS_AS((void)(c / R->constant(Rat(0))), std::domain_error);
}

TEST_CASE("canonical text and parsing round-trip") {
  auto R = test_ring();
  Scalar x = R->parse("3/4*c^2 - s*t + 1");
  CHECK(R->parse(x.str()) == x);
  CHECK(R->parse("(1 - c^2)/r") * R->sym("r") == R->parse("s^2"));
  CHECK(R->parse("c/c") == R->constant(Rat(1)));
  Scalar zero = R->parse("s^2 + c^2 - 1");
  CHECK(zero.is_zero());
  CHECK(zero.str() == "0");
}

TEST_CASE("pin: rational substitution with relation update") {
  auto R = test_ring();

  // th1 |-> -1/2 in th1*(2*th1 - 1) gives 1  (plain atom here: t)
  Scalar expr = R->parse("t*(2*t - 1)");
  auto pinned = pin_sym(R, R->find("t"), Rat(-1, 2));
  REQUIRE(!pinned.contradiction);
  CHECK(apply(pinned.map, expr) == pinned.ring->constant(Rat(1)));

  // u |-> 0 in the triple: remaining relation is a^2 + b^2 = 1
  auto no_u = pin_sym(R, R->find("u"), Rat(0));
  REQUIRE(!no_u.contradiction);
  Scalar aa = no_u.ring->sym("a"), bb = no_u.ring->sym("b");
  CHECK(aa * aa + bb * bb == no_u.ring->constant(Rat(1)));

  // pinning a nonvanishing symbol to zero is rejected
  CHECK_THROWS_AS(pin_sym(R, R->find("r"), Rat(0)), std::domain_error);
  CHECK_THROWS_AS(pin_sym(R, R->find("c"), Rat(0)), std::domain_error);

  // pinning every triple member inconsistently is a contradiction outcome
  auto p1 = pin_sym(R, R->find("a"), Rat(1));
  auto p2 = pin_sym(p1.ring, p1.ring->find("b"), Rat(0));
  auto p3 = pin_sym(p2.ring, p2.ring->find("u"), Rat(1));
  CHECK(p3.contradiction);
}

TEST_CASE("attached relation: rho = 1 - th1^2 - th2^2") {
  RingBuilder rb;
  SymId th1 = rb.add_atom("th1");
  SymId th2 = rb.add_atom("th2");
  SymId rho = rb.add_atom("rho", true);
  rb.add_relation({{th1, 2}, {th2, 2}, {rho, 1}}, Rat(1), th2);
  auto R = rb.freeze();

  Scalar T1 = R->sym("th1"), T2 = R->sym("th2"), P = R->sym("rho");
  CHECK(T1 * T1 + T2 * T2 + P == R->constant(Rat(1)));
  CHECK(P.is_unit());

  // pin both angles: rho is forced to the leftover rational
  auto q1 = pin_sym(R, th1, Rat(1, 2));
  auto q2 = pin_sym(q1.ring, q1.ring->find("th2"), Rat(1, 2));
  CHECK(apply(q2.map, apply(q1.map, P)) == q2.ring->constant(Rat(1, 2)));

  // forcing rho to zero hits the nonvanishing guard
  auto w1 = pin_sym(R, th1, Rat(1));
  CHECK_THROWS_AS(pin_sym(w1.ring, w1.ring->find("th2"), Rat(0)),
                  std::domain_error);
}

TEST_CASE("morphism to a new ring") {
  RingBuilder rb;
  rb.add_triple("a", "b", "u");
  auto R = rb.freeze();

  RingBuilder rb2;
  rb2.add_pair("ct", "st");
  auto T = rb2.freeze();

  // a -> cos t, b -> sin t, u -> 0 respects a^2+b^2+u^2 = 1
  auto m = make_morphism(R, T, {T->sym("ct"), T->sym("st"), T->constant(Rat(0))});
  Scalar img = apply(m, R->parse("a^2 + b^2"));
  CHECK(img == T->constant(Rat(1)));

  // a -> 2 does not
  CHECK_THROWS_AS(make_morphism(R, T, {T->constant(Rat(2)), T->sym("st"),
                                       T->constant(Rat(0))}),
                  std::invalid_argument);
}

TEST_CASE("ring axioms on randomized values") {
  auto R = test_ring();
  std::mt19937 rng(20240817);
  for (int i = 0; i < 40; ++i) {
    Scalar x = random_scalar(R, rng), y = random_scalar(R, rng),
           z = random_scalar(R, rng);
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x * y == y * x);
    CHECK(x - x == R->constant(Rat(0)));
  }
}

TEST_CASE("zero test sound and complete over the relation ideal") {
  auto R = test_ring();
  std::mt19937 rng(7);
  Scalar pyth = R->parse("s^2 + c^2 - 1");
  Scalar triple = R->parse("a^2 + b^2 + u^2 - 1");
  for (int i = 0; i < 40; ++i) {
    Scalar p = random_scalar(R, rng);
    CHECK((p * pyth).is_zero());
    CHECK((p * triple).is_zero());
    // idempotence: values are already normal forms, so re-adding zero is stable
    CHECK(p + R->constant(Rat(0)) == p);
  }
}

TEST_CASE("normalize is a projection on raw polynomials") {
  auto R = test_ring();
  std::mt19937 rng(515);
  std::uniform_int_distribution<int> expd(0, 5);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int round = 0; round < 60; ++round) {
    // raw monomials with high powers of the designated symbols
    Poly p;
    for (int t = 0; t < 4; ++t) {
      Monomial m(R->size());
      for (SymId s = 0; s < static_cast<SymId>(R->size()); ++s)
        m.set_exp(s, expd(rng));
      Rat c(coef(rng));
      if (!c.is_zero()) p[m] = c;
    }
    Poly once = R->normalize(p);
    Poly twice = R->normalize(once);
    CHECK(once == twice);
    // the normal form satisfies the exponent bound on designated symbols
    for (const auto& [m, c] : once)
      for (SymId s = 0; s < static_cast<SymId>(R->size()); ++s)
        if (R->designated(s)) CHECK(m.exp(s) <= 1);
  }
}
