#include <random>

#include "doctest.h"
#include "nk/linform.hpp"

using namespace nk;

namespace {

RingPtr plain_ring() { return RingBuilder{}.freeze(); }

RingPtr table1_ring() {
  // S3xS3 independent-case symbols: free angles th1, th2 and the unit
  // rho = 1 - th1^2 - th2^2
  RingBuilder rb;
  SymId th1 = rb.add_atom("th1");
  SymId th2 = rb.add_atom("th2");
  SymId rho = rb.add_atom("rho", true);
  rb.add_relation({{th1, 2}, {th2, 2}, {rho, 1}}, Rat(1), th2);
  return rb.freeze();
}

std::vector<LinForm> parse_all(const RingPtr& r,
                               std::initializer_list<const char*> texts) {
  std::vector<LinForm> v;
  for (const char* t : texts) v.push_back(parse_linform(r, t));
  return v;
}

}  // namespace

TEST_CASE("eliminate: S3xS3 dependent-case head rows") {
  auto R = plain_ring();
  auto sys = EqSystem::single_stage(
      R, parse_all(R, {"2*h22 + 3*h33 - 5*h55", "3*h22 + 2*h33 - 5*h44",
                       "5*h22 - 3*h44 - 2*h55"}));
  SolveResult res = eliminate(sys);
  CHECK(!res.contradiction);
  CHECK(res.deferred.empty());
  CHECK(res.solved.size() == 3);
  LinForm h22 = LinForm::unknown(Unknown::h(2, 2));
  CHECK(res.solved.at(Unknown::h(3, 3)) == h22);
  CHECK(res.solved.at(Unknown::h(4, 4)) == h22);
  CHECK(res.solved.at(Unknown::h(5, 5)) == h22);
}

TEST_CASE("eliminate: empty system") {
  auto R = plain_ring();
  SolveResult res = eliminate(EqSystem::single_stage(R, {}));
  CHECK(res.solved.empty());
  CHECK(res.deferred.empty());
  CHECK(!res.contradiction);
}

TEST_CASE("eliminate: flag three-distribution final stage") {
  // coefficients tan th2, csc 2th2 written through the cos/sin pair
  RingBuilder rb;
  rb.add_pair("c1", "s1", true, true);
  rb.add_pair("c2", "s2", true, true);
  auto R = rb.freeze();
  auto sys = EqSystem::single_stage(
      R, parse_all(R, {"h11 - 2*h22 + h55 + 2*(s2/c2)*h23",
                       "-2*h11 + h22 + h44 - (s2/c2)*h23",
                       "h11 - 2*h44 + h55",
                       "5*h44 - 5*h55 + 2*(1/(2*s2*c2))*h23",
                       "h11 - 2*h33 + h55 + 2*(c2/s2)*h23"}));
  SolveResult res = eliminate(sys);
  CHECK(!res.contradiction);
  CHECK(res.deferred.empty());
  LinForm h11 = LinForm::unknown(Unknown::h(1, 1));
  CHECK(res.solved.at(Unknown::h(2, 3)).is_zero());
  CHECK(res.solved.at(Unknown::h(2, 2)) == h11);
  CHECK(res.solved.at(Unknown::h(3, 3)) == h11);
  CHECK(res.solved.at(Unknown::h(4, 4)) == h11);
  CHECK(res.solved.at(Unknown::h(5, 5)) == h11);
}

TEST_CASE("eliminate: relations substituted back annihilate the inputs") {
  auto R = table1_ring();
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int round = 0; round < 20; ++round) {
    std::vector<LinForm> eqs;
    for (int e = 0; e < 4; ++e) {
      LinForm f;
      for (int i = 1; i <= 5; ++i)
        f = f + LinForm::unknown(Unknown::h(i, i), R->constant(Rat(coef(rng))));
      f = f + LinForm::unknown(Unknown::h(1, 2), R->sym("th1").pow(e % 2));
      eqs.push_back(f);
    }
    SolveResult res = eliminate(EqSystem::single_stage(R, eqs));
    if (res.contradiction) continue;
    for (const auto& eq : eqs) CHECK(res.reduce(eq).is_zero());
  }
}

TEST_CASE("eliminate: inconsistency is a contradiction outcome") {
  auto R = plain_ring();
  auto sys = EqSystem::single_stage(R, parse_all(R, {"h11 - 1", "h11 - 2"}));
  SolveResult res = eliminate(sys);
  CHECK(res.contradiction);
}

TEST_CASE("prove_by_cases: the h34 argument of the independent lemma") {
  auto R = table1_ring();
  // last two rows of the table: h34*(2 th1 + 1) = 0 and h34*th1*(2 th1 - 1) = 0
  auto sys = EqSystem::single_stage(
      R, parse_all(R, {"(2*th1 + 1)*h34", "(th1*(2*th1 - 1))*h34"}));
  CaseSplit split{R->parse("2*th1 + 1"), R->find("th1"), Rat(-1, 2)};
  CaseProof proof = prove_by_cases(sys, Unknown::h(3, 4), split);
  CHECK(proof.closed);
  REQUIRE(proof.branches.size() == 2);
  CHECK(proof.branches[0].target_zero);  // 2 th1 + 1 != 0 cancels directly
  CHECK(proof.branches[1].target_zero);  // th1 = -1/2 turns the second row into h34
  CHECK(replay(proof, R));
}

TEST_CASE("prove_by_cases: unit coefficient needs no split") {
  RingBuilder rb;
  rb.add_atom("lam", true);
  auto R = rb.freeze();
  auto sys = EqSystem::single_stage(R, parse_all(R, {"lam*h12"}));
  CaseProof proof = prove_by_cases(sys, Unknown::h(1, 2), std::nullopt);
  CHECK(proof.closed);
  CHECK(replay(proof, R));
}

TEST_CASE("prove_by_cases: unconstrained coefficient fails with residual") {
  RingBuilder rb;
  rb.add_atom("th");
  auto R = rb.freeze();
  auto sys = EqSystem::single_stage(R, parse_all(R, {"th*h12"}));
  CaseProof proof = prove_by_cases(sys, Unknown::h(1, 2), std::nullopt);
  CHECK(!proof.closed);
  REQUIRE(proof.branches.size() == 1);
  CHECK(!proof.branches[0].residual.empty());
}

TEST_CASE("match_up_to_unit: worked examples") {
  auto R = table1_ring();

  auto m1 = match_up_to_unit(parse_linform(R, "-3*h15"), parse_linform(R, "h15"));
  CHECK(m1.matched);
  CHECK(m1.kappa == R->constant(Rat(-3)));

  auto m2 = match_up_to_unit(LinForm(), parse_linform(R, "h12"));
  CHECK(!m2.matched);

  // Table 3 row "3 h25 - h34" recognized up to a unit
  auto m3 = match_up_to_unit(parse_linform(R, "(3/2)*rho*h25 - (1/2)*rho*h34"),
                             parse_linform(R, "3*h25 - h34"));
  CHECK(m3.matched);
  CHECK(m3.kappa == R->constant(Rat(1, 2)) * R->sym("rho"));

  // non-unit ratio must not match
  auto m4 = match_up_to_unit(parse_linform(R, "th1*h25"), parse_linform(R, "h25"));
  CHECK(!m4.matched);
}

TEST_CASE("match_up_to_unit: symmetry and reflexivity") {
  auto R = table1_ring();
  LinForm f = parse_linform(R, "3*h25 - h34 + rho*h11");
  auto self = match_up_to_unit(f, f);
  CHECK(self.matched);
  CHECK(self.kappa == R->constant(Rat(1)));

  LinForm g = R->sym("rho") * f;
  auto ab = match_up_to_unit(g, f);
  auto ba = match_up_to_unit(f, g);
  REQUIRE(ab.matched);
  REQUIRE(ba.matched);
  CHECK(ab.kappa * ba.kappa == R->constant(Rat(1)));
}

TEST_CASE("linform text round-trip") {
  auto R = table1_ring();
  LinForm f = parse_linform(R, "(1 - th1^2)*h12 - rho*h34 + th2");
  CHECK(parse_linform(R, f.str()) == f);
  CHECK(LinForm().str() == "0");
}
