#include "doctest.h"
#include "nk/almostcontact.hpp"
#include "nk/tables.hpp"

using namespace nk;

namespace {
const ACFrame& ac() {
  static ACFrame f = build_ac_frame();
  return f;
}
RingPtr triple_ring() {
  RingBuilder rb;
  rb.add_triple("a", "b", "c");
  return rb.freeze();
}
std::array<Scalar, 3> abc_syms(const RingPtr& r) {
  return {r->sym("a"), r->sym("b"), r->sym("c")};
}
std::array<Scalar, 3> abc_const(const RingPtr& r, Rat a, Rat b, Rat c) {
  return {r->constant(a), r->constant(b), r->constant(c)};
}
// substitution that kills every shape component except h55 and all derivs
std::map<Unknown, LinForm> only_h55() {
  std::map<Unknown, LinForm> rel;
  for (int i = 1; i <= 5; ++i)
    for (int j = i; j <= 5; ++j)
      if (!(i == 5 && j == 5)) rel.emplace(Unknown::h(i, j), LinForm());
  for (int d = 1; d <= 5; ++d)
    for (int fn = 0; fn < 3; ++fn) rel.emplace(Unknown::deriv(d, fn), LinForm());
  return rel;
}
std::map<Unknown, LinForm> everything_zero() {
  auto rel = only_h55();
  rel.emplace(Unknown::h(5, 5), LinForm());
  return rel;
}
}  // namespace

TEST_CASE("almost contact compatibility identities") {
  const ACFrame& f = ac();
  // phi_i^2 = -Id + eta (x) xi and the metric compatibility, exactly
  for (int i = 0; i < 3; ++i) {
    for (int x = 0; x < 5; ++x)
      for (int y = 0; y < 5; ++y) {
        // phi^2 = -Id + eta (x) xi
        Rat sq(0);
        for (int k = 0; k < 5; ++k) sq += f.phi[i][y][k] * f.phi[i][k][x];
        Rat want = Rat(x == y ? -1 : 0) + f.eta(x) * f.eta(y);
        CHECK(sq == want);
        // g(phi X, phi Y) = g(X,Y) - eta(X) eta(Y)
        Rat gg(0);
        for (int k = 0; k < 5; ++k) gg += f.phi[i][k][x] * f.phi[i][k][y];
        CHECK(gg == Rat(x == y ? 1 : 0) - f.eta(x) * f.eta(y));
      }
    // omega_i antisymmetric
    for (int x = 0; x < 5; ++x)
      for (int y = 0; y < 5; ++y)
        CHECK(f.omega(i + 1, x, y) + f.omega(i + 1, y, x) == Rat(0));
  }
  // phi_1 xi = 0 and eta o phi_1 = 0 by construction
  for (int k = 0; k < 5; ++k) {
    CHECK(f.phi[0][k][4] == Rat(0));
    CHECK(f.phi[0][4][k] == Rat(0));
  }
  // phi_2^2 zeta = -zeta
  Rat s(0);
  for (int k = 0; k < 5; ++k) s += f.phi[1][0][k] * f.phi[1][k][0];
  CHECK(s == Rat(-1));
  // phi_3 = phi_2 phi_1 as matrices
  for (int x = 0; x < 5; ++x)
    for (int y = 0; y < 5; ++y) {
      Rat comp(0);
      for (int k = 0; k < 5; ++k) comp += f.phi[1][y][k] * f.phi[0][k][x];
      CHECK(comp == f.phi[2][y][x]);
    }
}

TEST_CASE("covariant derivative formulas") {
  const ACFrame& f = ac();
  auto R = triple_ring();
  // (nabla_zeta phi3) zeta = -xi - G(S zeta, zeta) on (zeta, zeta)
  auto v = covariant_phi(f, R, 3, 0, 0);
  CHECK(v[4].constant() == R->constant(Rat(-1)));  // the -g(X,Y) xi term
  for (int k = 0; k < 5; ++k) {
    // the remaining h-linear part is exactly -G(S zeta, zeta)
    LinForm want;
    for (int j = 0; j < 5; ++j)
      want = want + Scalar(-f.G[j][0][k]) *
                        LinForm::unknown(Unknown::h(1, j + 1));
    LinForm got = v[static_cast<std::size_t>(k)];
    if (k == 4) got = got - LinForm(R->constant(Rat(-1)));
    CHECK(got == want);
  }
  // (nabla_X phi1) Y with S = 0 on (zeta,zeta): everything vanishes
  auto w = covariant_phi(f, R, 1, 0, 0);
  for (int k = 0; k < 6; ++k) {
    LinForm red = w[static_cast<std::size_t>(k)].substituted(everything_zero());
    CHECK(red.is_zero());
  }
  // (nabla_xi phi2) zeta contains g(xi, S xi) phi3 zeta = h55 p3z
  auto u = covariant_phi(f, R, 2, 4, 0);
  CHECK(u[3].coeff(Unknown::h(5, 5)) == R->constant(Rat(1)));
  // the normal component cancels identically for every i, X, Y
  for (int i = 1; i <= 3; ++i)
    for (int x = 0; x < 5; ++x)
      for (int y = 0; y < 5; ++y)
        CHECK(covariant_phi(f, R, i, x, y)[5].is_zero());
}

TEST_CASE("defining equation sample values") {
  const ACFrame& f = ac();
  auto R = triple_ring();
  auto abc = abc_syms(R);
  // Sasakian at (zeta, p1z, xi) reduces to b once S is diagonal
  LinForm e = defining_equation(f, R, ACKind::Sasakian, abc, 0, 1, 4);
  std::map<Unknown, LinForm> diag;
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j) diag.emplace(Unknown::h(i, j), LinForm());
  LinForm red = e.substituted(diag);
  CHECK(red.is_constant());
  CHECK(match_up_to_unit(red, LinForm(R->sym("b"))).matched);
}

TEST_CASE("totally geodesic sphere: phi3 is Sasakian") {
  const ACFrame& f = ac();
  auto R = triple_ring();
  auto abc = abc_const(R, Rat(0), Rat(0), Rat(1));
  for (int x = 0; x < 5; ++x)
    for (int y = 0; y < 5; ++y)
      for (int z = 0; z < 5; ++z) {
        LinForm e = defining_equation(f, R, ACKind::Sasakian, abc, x, y, z);
        CHECK(e.substituted(everything_zero()).is_zero());
      }
}

TEST_CASE("phi1 with S = lambda eta (x) xi is nearly cosymplectic") {
  const ACFrame& f = ac();
  auto R = triple_ring();
  auto abc = abc_const(R, Rat(1), Rat(0), Rat(0));
  auto rel = only_h55();  // h55 stays free: it is the lambda
  for (int x = 0; x < 5; ++x)
    for (int y = 0; y < 5; ++y)
      for (int z = 0; z < 5; ++z) {
        LinForm e =
            defining_equation(f, R, ACKind::NearlyCosymplectic, abc, x, y, z);
        CHECK(e.substituted(rel).is_zero());
      }
}

TEST_CASE("nearly sasakian equation is the symmetrization of the sasakian one") {
  const ACFrame& f = ac();
  auto R = triple_ring();
  auto abc = abc_syms(R);
  for (int x = 0; x < 5; ++x)
    for (int y = 0; y < 5; ++y)
      for (int z = 0; z < 5; ++z) {
        LinForm ns =
            defining_equation(f, R, ACKind::NearlySasakian, abc, x, y, z);
        LinForm s1 = defining_equation(f, R, ACKind::Sasakian, abc, x, y, z);
        LinForm s2 = defining_equation(f, R, ACKind::Sasakian, abc, y, x, z);
        CHECK(ns == s1 + s2);
        LinForm nc =
            defining_equation(f, R, ACKind::NearlyCosymplectic, abc, x, y, z);
        LinForm c1 = defining_equation(f, R, ACKind::CoKahler, abc, x, y, z);
        LinForm c2 = defining_equation(f, R, ACKind::CoKahler, abc, y, x, z);
        CHECK(nc == c1 + c2);
      }
}

TEST_CASE("k-contact reduction") {
  Report rep = verify_kcontact_reduction();
  INFO(rep.to_text());
  CHECK(rep.passed());
}

TEST_CASE("theorem B cases replay") {
  std::string path = default_data_dir() + "/theorem_b.txt";
  for (int k = 1; k <= 4; ++k) {
    Report rep = verify_theoremB_case(k, path);
    INFO(rep.to_text());
    CHECK(rep.passed());
  }
}
