#include "nk/almostcontact.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace nk {

ACKind ac_kind_by_name(const std::string& name) {
  if (name == "sasakian") return ACKind::Sasakian;
  if (name == "cokahler") return ACKind::CoKahler;
  if (name == "nearly-sasakian") return ACKind::NearlySasakian;
  if (name == "nearly-cosymplectic") return ACKind::NearlyCosymplectic;
  throw std::invalid_argument("unknown almost contact class " + name);
}

Rat ACFrame::omega(int i, int x, int y) const {
  // g(phi_i E_x, E_y) over the orthonormal frame
  if (x < 0 || x > 4 || y < 0 || y > 4)
    throw std::invalid_argument("omega: tangent indices only");
  if (x == 4 || y == 4) return Rat(0);  // phi_i xi = 0 and eta o phi_i = 0
  return phi[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(y)]
            [static_cast<std::size_t>(x)];
}

ACFrame build_ac_frame() {
  ACFrame ac;
  ac.model = build_model(Space::S6);  // only g, J, G enter; any space works
  const Model& m = ac.model;

  // N = f1, xi = -JN = -Jf1, zeta = f2
  MVec N = m.basis(0);
  MVec xi{};
  {
    MVec jn = m.apply(m.J, N);
    for (int k = 0; k < 6; ++k) xi[k] = -jn[k];
  }
  MVec zeta = m.basis(2);
  auto phi1 = [&](const MVec& v) {
    // J v - eta(v) N with eta(v) = g(v, xi)
    MVec jv = m.apply(m.J, v);
    Rat e = m.dot(v, xi);
    for (int k = 0; k < 6; ++k) jv[k] -= e * N[k];
    return jv;
  };
  auto phi2 = [&](const MVec& v) { return m.apply_G(xi, v); };
  auto phi3 = [&](const MVec& v) { return m.apply_G(N, v); };

  ac.vectors = {zeta, phi1(zeta), phi2(zeta), phi3(zeta), xi, N};

  auto to_frame = [&](const MVec& v) {
    MVec c{};
    for (int i = 0; i < 6; ++i) c[i] = m.dot(v, ac.vectors[static_cast<std::size_t>(i)]);
    return c;
  };

  for (int i = 0; i < 3; ++i)
    for (int x = 0; x < 5; ++x) {
      MVec img = i == 0   ? phi1(ac.vectors[static_cast<std::size_t>(x)])
                 : i == 1 ? phi2(ac.vectors[static_cast<std::size_t>(x)])
                          : phi3(ac.vectors[static_cast<std::size_t>(x)]);
      MVec c = to_frame(img);
      for (int j = 0; j < 5; ++j)
        ac.phi[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
              [static_cast<std::size_t>(x)] = c[static_cast<std::size_t>(j)];
    }

  for (int x = 0; x < 6; ++x)
    for (int y = 0; y < 6; ++y)
      ac.G[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = to_frame(
          m.apply_G(ac.vectors[static_cast<std::size_t>(x)],
                    ac.vectors[static_cast<std::size_t>(y)]));
  return ac;
}

namespace {

using LinVec = std::array<LinForm, 6>;

void acc_vec(LinVec& acc, const MVec& v, const LinForm& coeff) {
  for (int k = 0; k < 6; ++k) {
    if (v[k].is_zero()) continue;
    acc[static_cast<std::size_t>(k)] =
        acc[static_cast<std::size_t>(k)] + Scalar(v[k]) * coeff;
  }
}

void acc_basis(LinVec& acc, int k, const LinForm& coeff) {
  acc[static_cast<std::size_t>(k)] = acc[static_cast<std::size_t>(k)] + coeff;
}

// phi_i E_x as a frame-coordinate rational vector
MVec phi_vec(const ACFrame& ac, int i, int x) {
  MVec v{};
  if (x == 4) return v;  // phi_i xi = 0
  if (x == 5) throw std::invalid_argument("phi of the normal");
  for (int j = 0; j < 5; ++j)
    v[j] = ac.phi[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)]
                 [static_cast<std::size_t>(x)];
  return v;
}

LinForm h_of(int x, int y) {  // zero-based tangent indices
  return LinForm::unknown(Unknown::h(x + 1, y + 1));
}

}  // namespace

std::array<LinForm, 6> covariant_phi(const ACFrame& ac, const RingPtr& ring,
                                     int i, int X, int Y) {
  if (X < 0 || X > 4 || Y < 0 || Y > 4)
    throw std::invalid_argument("covariant_phi: tangent arguments required");
  LinVec out;
  for (auto& f : out) f = LinForm(ring->constant(Rat(0)));
  LinForm one(ring->constant(Rat(1)));
  auto rat = [&](Rat r) { return LinForm(ring->constant(r)); };
  const std::size_t XI = 4, NN = 5;
  auto Gxy = [&](int x, int y) -> const MVec& {
    return ac.G[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
  };

  switch (i) {
    case 1: {
      // G(X,Y) - omega_3(X,Y) N + eta(Y) SX - h(X,Y) xi
      acc_vec(out, Gxy(X, Y), one);
      acc_basis(out, NN, rat(-ac.omega(3, X, Y)));
      if (Y == 4)
        for (int j = 0; j < 5; ++j) acc_basis(out, j, h_of(X, j));
      acc_basis(out, XI, Scalar(Rat(-1)) * h_of(X, Y));
      break;
    }
    case 2: {
      // eta(Y) phi1 X - eta(X) phi1 Y - omega_1(X,Y) xi
      //   + omega_2(SX,Y) N + G(phi1 SX, Y) + g(X, S xi) phi3 Y
      if (Y == 4) acc_vec(out, phi_vec(ac, 1, X), one);
      if (X == 4) acc_vec(out, phi_vec(ac, 1, Y), Scalar(Rat(-1)) * one);
      acc_basis(out, XI, rat(-ac.omega(1, X, Y)));
      for (int j = 0; j < 5; ++j) {
        acc_basis(out, NN, Scalar(ac.omega(2, j, Y)) * h_of(X, j));
        // G(phi1 E_j, Y): expand phi1 E_j through the frame table
        MVec p1 = phi_vec(ac, 1, j);
        for (int k = 0; k < 5; ++k) {
          if (p1[k].is_zero()) continue;
          LinForm coeff = Scalar(p1[k]) * h_of(X, j);
          acc_vec(out, Gxy(k, Y), coeff);
        }
      }
      acc_vec(out, phi_vec(ac, 3, Y), h_of(4, X));
      break;
    }
    case 3: {
      // eta(Y) X - g(X,Y) xi - G(SX,Y) + omega_3(SX,Y) N
      if (Y == 4) acc_basis(out, X, one);
      acc_basis(out, XI, rat(X == Y ? Rat(-1) : Rat(0)));
      for (int j = 0; j < 5; ++j) {
        acc_vec(out, Gxy(j, Y), Scalar(Rat(-1)) * h_of(X, j));
        acc_basis(out, NN, Scalar(ac.omega(3, j, Y)) * h_of(X, j));
      }
      break;
    }
    default:
      throw std::invalid_argument("covariant_phi: i in 1..3");
  }
  return out;
}

namespace {

// (nabla_X phi) Y for phi = a phi1 + b phi2 + c phi3 including the formal
// derivative terms X(a) phi1 Y + X(b) phi2 Y + X(c) phi3 Y
LinVec nabla_phi(const ACFrame& ac, const RingPtr& ring,
                 const std::array<Scalar, 3>& abc, int X, int Y) {
  LinVec out;
  for (auto& f : out) f = LinForm(ring->constant(Rat(0)));
  for (int i = 1; i <= 3; ++i) {
    LinVec part = covariant_phi(ac, ring, i, X, Y);
    const Scalar& coef = abc[static_cast<std::size_t>(i - 1)];
    for (int k = 0; k < 6; ++k)
      out[static_cast<std::size_t>(k)] =
          out[static_cast<std::size_t>(k)] +
          coef * part[static_cast<std::size_t>(k)];
    LinForm dterm = LinForm::unknown(Unknown::deriv(X + 1, i - 1));
    acc_vec(out, phi_vec(ac, i, Y), dterm);
  }
  return out;
}

}  // namespace

LinForm defining_equation(const ACFrame& ac, const RingPtr& ring, ACKind kind,
                          const std::array<Scalar, 3>& abc, int X, int Y,
                          int Z) {
  if (Z < 0 || Z > 4)
    throw std::invalid_argument("defining_equation: tangent Z required");
  LinVec L = nabla_phi(ac, ring, abc, X, Y);
  auto rat = [&](Rat r) { return LinForm(ring->constant(r)); };
  const std::size_t XI = 4;
  switch (kind) {
    case ACKind::Sasakian:
      // (nabla_X phi) Y = eta(Y) X - g(X,Y) xi
      acc_basis(L, X, rat(-ac.eta(Y)));
      acc_basis(L, XI, rat(Rat(X == Y ? 1 : 0)));
      break;
    case ACKind::CoKahler:
      break;  // nabla phi = 0
    case ACKind::NearlySasakian:
    case ACKind::NearlyCosymplectic: {
      LinVec L2 = nabla_phi(ac, ring, abc, Y, X);
      for (int k = 0; k < 6; ++k)
        L[static_cast<std::size_t>(k)] =
            L[static_cast<std::size_t>(k)] + L2[static_cast<std::size_t>(k)];
      if (kind == ACKind::NearlySasakian) {
        // = eta(Y) X + eta(X) Y - 2 g(X,Y) xi
        acc_basis(L, X, rat(-ac.eta(Y)));
        acc_basis(L, Y, rat(-ac.eta(X)));
        acc_basis(L, XI, rat(Rat(X == Y ? 2 : 0)));
      }
      break;
    }
  }
  return L[static_cast<std::size_t>(Z)];
}

std::vector<LinForm> kcontact_equations(const ACFrame& ac, const RingPtr& ring) {
  std::vector<LinForm> eqs;
  // sym(phi_1 S) = 0: g(phi1 S E_x, E_y) + g(phi1 S E_y, E_x) = 0
  for (int x = 0; x < 5; ++x)
    for (int y = x; y < 5; ++y) {
      LinForm f(ring->constant(Rat(0)));
      for (int j = 0; j < 5; ++j) {
        f = f + Scalar(ac.omega(1, j, y)) * h_of(x, j);
        f = f + Scalar(ac.omega(1, j, x)) * h_of(y, j);
      }
      if (!f.is_zero()) eqs.push_back(f);
    }
  // zeta is chosen as an eigenvector of S inside ker(eta)
  for (int j = 1; j < 5; ++j) eqs.push_back(h_of(0, j));
  return eqs;
}

Report verify_kcontact_reduction() {
  Report rep;
  rep.suite = "k-contact reduction";
  ACFrame ac = build_ac_frame();
  RingPtr ring = RingBuilder{}.freeze();
  SolveResult res = eliminate(EqSystem::single_stage(ring, kcontact_equations(ac, ring)));

  rep.add("system is consistent", !res.contradiction);
  bool off = true;
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j)
      off = off && res.reduce(LinForm::unknown(Unknown::h(i, j))).is_zero();
  rep.add("h(i,j) = 0 for i != j", off);
  rep.add("h11 = h22", res.reduce(LinForm::unknown(Unknown::h(2, 2))) ==
                           LinForm::unknown(Unknown::h(1, 1)));
  rep.add("h33 = h44", res.reduce(LinForm::unknown(Unknown::h(4, 4))) ==
                           LinForm::unknown(Unknown::h(3, 3)));
  bool free55 = res.reduce(LinForm::unknown(Unknown::h(5, 5))) ==
                LinForm::unknown(Unknown::h(5, 5));
  rep.add("xi is an eigenvector with free eigenvalue h55", free55);
  return rep;
}

// ------------------------------------------------------- proof replay

namespace {

int frame_index(const std::string& label) {
  if (label == "zeta") return 0;
  if (label == "p1z") return 1;
  if (label == "p2z") return 2;
  if (label == "p3z") return 3;
  if (label == "xi") return 4;
  throw std::runtime_error("script: unknown frame label " + label);
}

Rat parse_rat_text(const std::string& s) {
  std::size_t slash = s.find('/');
  if (slash == std::string::npos) return Rat(std::stoll(s));
  return Rat(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

struct ProofState {
  const ACFrame* ac = nullptr;
  ACKind kind = ACKind::Sasakian;
  RingPtr ring;
  std::array<Scalar, 3> abc;
  std::vector<LinForm> facts;
  SolveResult solved;
  std::vector<Scalar> constraints;
  bool contradiction = false;

  void refresh() {
    SolveResult r = eliminate(EqSystem::single_stage(ring, facts));
    solved = std::move(r);
    constraints = solved.constraints;
    contradiction = contradiction || solved.contradiction;
  }
  void morph(const Morphism& m, const RingPtr& target) {
    std::vector<LinForm> mapped;
    for (const auto& f : facts) mapped.push_back(apply(m, f));
    facts = std::move(mapped);
    for (auto& s : abc) s = apply(m, s);
    ring = target;
    refresh();
  }
  void add_fact(const LinForm& f) {
    facts.push_back(f);
    refresh();
  }
};

struct ScriptLine {
  std::string text;
  std::vector<std::string> tokens;
};

std::vector<std::string> tokens_of(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string t;
  while (is >> t) out.push_back(t);
  return out;
}

// executes lines [pos, end) until an unmatched `end`; returns new pos
std::size_t run_block(const std::vector<ScriptLine>& lines, std::size_t pos,
                      ProofState state, Report& rep, const std::string& prefix);

void run_command(const ScriptLine& line, ProofState& st, Report& rep,
                 const std::string& prefix) {
  const auto& tk = line.tokens;
  const std::string& cmd = tk[0];
  const ACFrame& ac = *st.ac;

  auto expected_tail = [&](const std::string& text) {
    std::size_t sep = text.find("::");
    return text.substr(sep + 2);
  };

  if (cmd == "kind") {
    st.kind = ac_kind_by_name(tk[1]);
    // the unit-norm constraint a^2+b^2+c^2 = 1 differentiates to
    // a X(a) + b X(b) + c X(c) = 0 along every frame direction
    for (int dir = 1; dir <= 5; ++dir) {
      LinForm f(st.ring->constant(Rat(0)));
      for (int fn = 0; fn < 3; ++fn)
        f = f + st.abc[static_cast<std::size_t>(fn)] *
                    LinForm::unknown(Unknown::deriv(dir, fn));
      st.facts.push_back(f);
    }
    st.refresh();
    return;
  }
  if (cmd == "kcontact") {
    for (const auto& f : kcontact_equations(ac, st.ring)) st.facts.push_back(f);
    st.refresh();
    rep.add(prefix + "k-contact reduction applied", !st.contradiction);
    return;
  }
  if (cmd == "eq" || cmd == "eqd") {
    int X = frame_index(tk[1]), Y = frame_index(tk[2]), Z = frame_index(tk[3]);
    LinForm raw = defining_equation(ac, st.ring, st.kind, st.abc, X, Y, Z);
    LinForm red = st.solved.reduce(raw);
    std::string id = prefix + cmd + " (" + tk[1] + ", " + tk[2] + ", " + tk[3] + ")";
    if (cmd == "eq") {
      LinForm want = st.solved.reduce(parse_linform(st.ring, expected_tail(line.text)));
      MatchResult m = match_up_to_unit(red, want);
      auto& item = rep.add(id, m.matched);
      item.fields["computed"] = red.str();
      item.fields["expected"] = expected_tail(line.text);
      if (m.matched)
        item.fields["kappa"] = m.kappa.str();
      else
        item.fields["residual"] = m.diff;
    } else {
      auto& item = rep.add(id, true);
      item.fields["computed"] = red.str();
    }
    st.add_fact(red);
    return;
  }
  if (cmd == "derive") {
    for (std::size_t i = 1; i < tk.size(); ++i) {
      auto u = Unknown::from_name(tk[i]);
      bool zero = u && st.solved.reduce(LinForm::unknown(*u)).is_zero();
      rep.add(prefix + "derived " + tk[i] + " = 0", zero);
    }
    return;
  }
  if (cmd == "check") {
    LinForm f = parse_linform(st.ring, line.text.substr(6));
    rep.add(prefix + "check " + f.str() + " = 0",
            st.solved.reduce(f).is_zero());
    return;
  }
  if (cmd == "pin") {
    SymId s = st.ring->find(tk[1]);
    Rat v = parse_rat_text(tk[2]);
    // a pin must be backed: by a derived constraint that vanishes under it,
    // or by a sum-of-squares relation forcing the symbol to zero
    bool backed = false;
    {
      PinOutcome probe = pin_sym(st.ring, s, v);
      for (const auto& c : st.constraints)
        if (apply(probe.map, c).is_zero()) backed = true;
    }
    if (!backed && v.is_zero()) {
      for (const auto& rel : st.ring->relations())
        if (rel.members.size() == 1 && rel.members[0].sym == s &&
            rel.members[0].pow == 2 && rel.rhs.is_zero())
          backed = true;
    }
    rep.add(prefix + "pin " + tk[1] + " = " + tk[2] + " is backed", backed);
    PinOutcome out = pin_sym(st.ring, s, v);
    st.contradiction = st.contradiction || out.contradiction;
    // the derivative of a pinned (constant) coefficient vanishes
    std::optional<int> fn;
    if (tk[1] == "a") fn = 0;
    if (tk[1] == "b") fn = 1;
    if (tk[1] == "c") fn = 2;
    st.morph(out.map, out.ring);
    if (fn)
      for (int dir = 1; dir <= 5; ++dir)
        st.add_fact(LinForm::unknown(Unknown::deriv(dir, *fn)));
    return;
  }
  if (cmd == "assume-nonzero") {
    SymId s = st.ring->find(tk[1]);
    RingPtr target = with_nonvanishing(st.ring, s);
    std::vector<Scalar> images;
    for (SymId i = 0; i < static_cast<SymId>(st.ring->size()); ++i)
      images.push_back(target->sym(i));
    st.morph(make_morphism(st.ring, target, images), target);
    return;
  }
  if (cmd == "map-angle") {
    // map-angle A B C S : substitute A -> cos, B -> sin of a fresh angle
    SymId sa = st.ring->find(tk[1]);
    SymId sb = st.ring->find(tk[2]);
    if (sa < 0 || sb < 0) throw std::runtime_error("map-angle: unknown symbols");
    RingBuilder rb;
    std::vector<int> old_to_new(st.ring->size(), -1);
    for (SymId i = 0; i < static_cast<SymId>(st.ring->size()); ++i) {
      if (i == sa || i == sb) continue;
      const auto& info = st.ring->info(i);
      old_to_new[static_cast<std::size_t>(i)] = rb.add_atom(info.name, info.nonvanishing);
    }
    auto [cs, sn] = rb.add_pair(tk[3], tk[4]);
    RingPtr target = rb.freeze();
    std::vector<Scalar> images(st.ring->size());
    for (SymId i = 0; i < static_cast<SymId>(st.ring->size()); ++i) {
      if (i == sa)
        images[static_cast<std::size_t>(i)] = target->sym(cs);
      else if (i == sb)
        images[static_cast<std::size_t>(i)] = target->sym(sn);
      else
        images[static_cast<std::size_t>(i)] =
            target->sym(old_to_new[static_cast<std::size_t>(i)]);
    }
    st.morph(make_morphism(st.ring, target, images), target);
    rep.add(prefix + "reparametrized " + tk[1] + ", " + tk[2] + " as cos/sin " +
                tk[3] + "," + tk[4],
            true);
    return;
  }
  if (cmd == "pin-angle") {
    // pin-angle C S vc vs
    PinOutcome p1 = pin_sym(st.ring, st.ring->find(tk[1]), parse_rat_text(tk[3]));
    st.contradiction = st.contradiction || p1.contradiction;
    st.morph(p1.map, p1.ring);
    PinOutcome p2 = pin_sym(st.ring, st.ring->find(tk[2]), parse_rat_text(tk[4]));
    st.contradiction = st.contradiction || p2.contradiction;
    st.morph(p2.map, p2.ring);
    return;
  }
  if (cmd == "expect-constraint") {
    Scalar want = st.ring->parse(line.text.substr(std::string("expect-constraint").size()));
    bool found = false;
    std::string got;
    for (const auto& c : st.constraints) {
      got += (got.empty() ? "" : "; ") + c.str();
      if (match_up_to_unit(LinForm(c), LinForm(want)).matched) found = true;
    }
    auto& item = rep.add(prefix + "constraint " + want.str() + " = 0 derived",
                         found);
    if (!found) item.fields["constraints"] = got.empty() ? "(none)" : got;
    return;
  }
  if (cmd == "expect-contradiction") {
    rep.add(prefix + "contradiction reached", st.contradiction);
    return;
  }
  if (cmd == "conclude") {
    // conclude diag T1 T2 T3 T4 T5 phi TA TB TC
    std::size_t i = 1;
    if (tk[i] != "diag") throw std::runtime_error("conclude: diag expected");
    ++i;
    bool ok = !st.contradiction;
    for (int d = 1; d <= 5; ++d, ++i) {
      LinForm got = st.solved.reduce(LinForm::unknown(Unknown::h(d, d)));
      if (tk[i] == "free") {
        ok = ok && got == LinForm::unknown(Unknown::h(d, d));
      } else {
        ok = ok && got == parse_linform(st.ring, tk[i]);
      }
    }
    for (int x = 1; x <= 5; ++x)
      for (int y = x + 1; y <= 5; ++y)
        ok = ok && st.solved.reduce(LinForm::unknown(Unknown::h(x, y))).is_zero();
    if (tk[i] != "phi") throw std::runtime_error("conclude: phi expected");
    ++i;
    for (int fn = 0; fn < 3; ++fn, ++i)
      ok = ok && st.abc[static_cast<std::size_t>(fn)] == st.ring->parse(tk[i]);
    auto& item = rep.add(prefix + "final family matches the statement", ok);
    std::string diag;
    for (int d = 1; d <= 5; ++d)
      diag += st.solved.reduce(LinForm::unknown(Unknown::h(d, d))).str() +
              (d < 5 ? ", " : "");
    item.fields["S"] = "diag(" + diag + ")";
    item.fields["phi"] = st.abc[0].str() + " phi1 + " + st.abc[1].str() +
                         " phi2 + " + st.abc[2].str() + " phi3";
    return;
  }
  throw std::runtime_error("script: unknown command " + cmd);
}

std::size_t run_block(const std::vector<ScriptLine>& lines, std::size_t pos,
                      ProofState state, Report& rep, const std::string& prefix) {
  while (pos < lines.size()) {
    const auto& line = lines[pos];
    const std::string& cmd = line.tokens[0];
    if (cmd == "end") return pos + 1;
    if (cmd == "case") return pos;  // next case starts; caller handles
    if (cmd == "branch") {
      // the branch hypothesis is applied to a copy of the state, unchecked:
      // its complement appears as a sibling branch
      std::string label;
      for (std::size_t i = 1; i < line.tokens.size(); ++i)
        label += (label.empty() ? "" : " ") + line.tokens[i];
      ProofState hyp = state;
      const auto& tk = line.tokens;
      if (tk.size() >= 4 && tk[1] == "pin") {
        PinOutcome out = pin_sym(hyp.ring, hyp.ring->find(tk[2]),
                                 parse_rat_text(tk[3]));
        hyp.contradiction = hyp.contradiction || out.contradiction;
        std::optional<int> fn;
        if (tk[2] == "a") fn = 0;
        if (tk[2] == "b") fn = 1;
        if (tk[2] == "c") fn = 2;
        hyp.morph(out.map, out.ring);
        if (fn)
          for (int dir = 1; dir <= 5; ++dir)
            hyp.add_fact(LinForm::unknown(Unknown::deriv(dir, *fn)));
      } else if (tk.size() >= 3 && tk[1] == "assume-nonzero") {
        SymId s = hyp.ring->find(tk[2]);
        RingPtr target = with_nonvanishing(hyp.ring, s);
        std::vector<Scalar> images;
        for (SymId i = 0; i < static_cast<SymId>(hyp.ring->size()); ++i)
          images.push_back(target->sym(i));
        hyp.morph(make_morphism(hyp.ring, target, images), target);
      } else if (tk.size() >= 6 && tk[1] == "pin-angle") {
        PinOutcome p1 = pin_sym(hyp.ring, hyp.ring->find(tk[2]),
                                parse_rat_text(tk[4]));
        hyp.contradiction = hyp.contradiction || p1.contradiction;
        hyp.morph(p1.map, p1.ring);
        PinOutcome p2 = pin_sym(hyp.ring, hyp.ring->find(tk[3]),
                                parse_rat_text(tk[5]));
        hyp.contradiction = hyp.contradiction || p2.contradiction;
        hyp.morph(p2.map, p2.ring);
      }
      std::size_t next = run_block(lines, pos + 1, std::move(hyp), rep,
                                   prefix + "[" + label + "] ");
      pos = next;
      continue;
    }
    run_command(line, state, rep, prefix);
    ++pos;
  }
  return pos;
}

}  // namespace

Report verify_theoremB_case(int case_id, const std::string& script_path) {
  std::string content = read_file(script_path);
  Report rep;
  rep.suite = "theorem-b case " + std::to_string(case_id);
  rep.checksum = fnv1a(content);

  std::vector<ScriptLine> lines;
  {
    std::istringstream in(content);
    std::string raw;
    while (std::getline(in, raw)) {
      std::size_t hash = raw.find('#');
      if (hash != std::string::npos) raw = raw.substr(0, hash);
      auto tk = tokens_of(raw);
      if (tk.empty()) continue;
      lines.push_back({raw, tk});
    }
  }

  // find the case block
  std::size_t pos = 0;
  while (pos < lines.size() &&
         !(lines[pos].tokens[0] == "case" &&
           std::stoi(lines[pos].tokens[1]) == case_id))
    ++pos;
  if (pos == lines.size())
    throw std::runtime_error("script: no case " + std::to_string(case_id));

  ACFrame ac = build_ac_frame();
  ProofState st;
  st.ac = &ac;
  RingBuilder rb;
  auto [ia, ib, ic] = rb.add_triple("a", "b", "c");
  st.ring = rb.freeze();
  st.abc = {st.ring->sym(ia), st.ring->sym(ib), st.ring->sym(ic)};
  st.refresh();

  run_block(lines, pos + 1, std::move(st), rep, "");
  return rep;
}

}  // namespace nk
