#include "nk/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace nk {

namespace {

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      Monomial m = ma * mb;
      auto it = r.find(m);
      if (it == r.end()) {
        Rat c = ca * cb;
        if (!c.is_zero()) r.emplace(std::move(m), c);
      } else {
        it->second += ca * cb;
        if (it->second.is_zero()) r.erase(it);
      }
    }
  return r;
}

void poly_acc(Poly& dst, const Monomial& m, const Rat& c) {
  if (c.is_zero()) return;
  auto it = dst.find(m);
  if (it == dst.end()) {
    dst.emplace(m, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) dst.erase(it);
  }
}

}  // namespace

// ---------------------------------------------------------------- Scalar

Scalar::Scalar() : ring_(Ring::rationals()), den_(0) {}

Scalar::Scalar(Rat r) : ring_(Ring::rationals()), den_(0) {
  if (!r.is_zero()) num_.emplace(Monomial(0), r);
}

bool Scalar::is_rational() const {
  if (num_.empty()) return true;
  return num_.size() == 1 && num_.begin()->first.trivial() && den_.trivial();
}

Rat Scalar::rat_value() const {
  if (num_.empty()) return Rat(0);
  if (!is_rational()) throw std::domain_error("Scalar: not a rational constant");
  return num_.begin()->second;
}

namespace {

// exact division of p by a divisor univariate in symbol v with rational
// coefficients; empty result when not divisible
std::optional<Poly> poly_divide_univariate(const Poly& p, const Poly& divisor,
                                           SymId v) {
  int dm = 0;
  std::map<int, Rat> dcoef;
  for (const auto& [m, c] : divisor) {
    if (m.degree() != m.exp(v)) return std::nullopt;  // other symbols present
    dcoef[m.exp(v)] = c;
    dm = std::max(dm, m.exp(v));
  }
  if (dm == 0 || dcoef.find(dm) == dcoef.end()) return std::nullopt;
  int n = 0;
  std::map<int, Poly> by_deg;
  for (const auto& [m, c] : p) {
    Monomial m2 = m;
    int d = m.exp(v);
    m2.set_exp(v, 0);
    by_deg[d][m2] = c;  // monomials within a fixed degree are distinct
    n = std::max(n, d);
  }
  if (n < dm) return std::nullopt;
  auto sub_scaled = [&](int deg, const Poly& q, const Rat& factor) {
    Poly& dst = by_deg[deg];
    for (const auto& [m, c] : q) {
      auto it = dst.find(m);
      Rat add = -(c * factor);
      if (it == dst.end()) {
        if (!add.is_zero()) dst.emplace(m, add);
      } else {
        it->second += add;
        if (it->second.is_zero()) dst.erase(it);
      }
    }
  };
  Rat lead = dcoef[dm];
  std::map<int, Poly> quot;
  for (int k = n - dm; k >= 0; --k) {
    Poly qk;
    auto it = by_deg.find(k + dm);
    if (it != by_deg.end() && !it->second.empty()) {
      for (const auto& [m, c] : it->second) qk[m] = c / lead;
    }
    if (qk.empty()) continue;
    quot[k] = qk;
    for (const auto& [dd, dc] : dcoef) sub_scaled(k + dd, qk, dc);
  }
  for (const auto& [d, poly] : by_deg)
    if (!poly.empty()) return std::nullopt;
  Poly result;
  for (const auto& [k, poly] : quot)
    for (const auto& [m, c] : poly) {
      Monomial mm = m;
      mm.set_exp(v, mm.exp(v) + k);
      result[mm] = c;
    }
  return result;
}

struct UnitFactor {
  Rat coeff;
  Monomial mono;     // monomial part, symbols all nonvanishing
  Monomial squares;  // product of peeled-off squares of nonvanishing symbols
};

// factor a numerator as coeff * mono * prod(normalize(d^2))^k with d ranging
// over nonvanishing designated symbols (sin-type), all invertible pieces
std::optional<UnitFactor> unit_factor(const Ring& ring, Poly num) {
  if (num.empty()) return std::nullopt;
  Monomial squares(ring.size());
  for (;;) {
    if (num.size() == 1) {
      const auto& [m, c] = *num.begin();
      for (SymId s = 0; s < static_cast<SymId>(m.size()); ++s)
        if (m.exp(s) > 0 && !ring.info(s).nonvanishing) return std::nullopt;
      return UnitFactor{c, m, squares};
    }
    bool progress = false;
    for (SymId d = 0; d < static_cast<SymId>(ring.size()) && !progress; ++d) {
      if (!ring.info(d).nonvanishing || !ring.designated(d)) continue;
      SymId partner = ring.info(d).partner;
      if (partner < 0) continue;
      const Poly* rep = ring.square_replacement(d);
      if (!rep) continue;
      if (auto q = poly_divide_univariate(num, *rep, partner)) {
        num = std::move(*q);
        squares.set_exp(d, squares.exp(d) + 2);
        progress = true;
      }
    }
    if (!progress) return std::nullopt;
  }
}

}  // namespace

bool Scalar::is_unit() const {
  return unit_factor(*ring_, num_).has_value();
}

Scalar Scalar::inverse() const {
  auto uf = unit_factor(*ring_, num_);
  if (!uf) throw std::domain_error("Scalar: inverse of a non-unit");
  Scalar r;
  r.ring_ = ring_;
  r.num_.emplace(den_, Rat(1) / uf->coeff);
  r.den_ = uf->mono * uf->squares;
  r.canonicalize();
  return r;
}

Scalar Scalar::pow(int k) const {
  if (k < 0) throw std::domain_error("Scalar: negative power");
  Scalar r = ring_->constant(Rat(1));
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

static void promote(const Scalar& x, const RingPtr& ring, Scalar& out) {
  // x must be rational-only to move between rings
  if (!x.is_rational())
    throw std::invalid_argument("Scalar: mixing values from different rings");
  out = ring->constant(x.is_zero() ? Rat(0) : x.rat_value());
}

static void match_rings(Scalar& a, Scalar& b) {
  if (a.ring() == b.ring()) return;
  if (a.ring() == Ring::rationals()) {
    Scalar t;
    promote(a, b.ring(), t);
    a = t;
  } else if (b.ring() == Ring::rationals()) {
    Scalar t;
    promote(b, a.ring(), t);
    b = t;
  } else {
    throw std::invalid_argument("Scalar: mixing values from different rings");
  }
}

void Scalar::canonicalize() {
  num_ = ring_->normalize(std::move(num_));
  if (num_.empty()) {
    den_ = Monomial(ring_->size());
    return;
  }
  // cancel symbol powers common to den and every num term
  for (SymId s = 0; s < static_cast<SymId>(den_.size()); ++s) {
    int k = den_.exp(s);
    if (k == 0) continue;
    int mn = k;
    for (const auto& [m, c] : num_) mn = std::min(mn, m.exp(s));
    if (mn == 0) continue;
    Poly nn;
    for (const auto& [m, c] : num_) {
      Monomial m2 = m;
      m2.set_exp(s, m.exp(s) - mn);
      nn.emplace(std::move(m2), c);
    }
    num_ = std::move(nn);
    den_.set_exp(s, k - mn);
  }
}

Scalar operator+(const Scalar& a0, const Scalar& b0) {
  Scalar a = a0, b = b0;
  match_rings(a, b);
  Scalar r;
  r.ring_ = a.ring_;
  // common denominator = componentwise max of the two monomials
  Monomial l(a.ring_->size());
  for (SymId s = 0; s < static_cast<SymId>(l.size()); ++s)
    l.set_exp(s, std::max(a.den_.exp(s), b.den_.exp(s)));
  Monomial fa(a.ring_->size()), fb(a.ring_->size());
  for (SymId s = 0; s < static_cast<SymId>(l.size()); ++s) {
    fa.set_exp(s, l.exp(s) - a.den_.exp(s));
    fb.set_exp(s, l.exp(s) - b.den_.exp(s));
  }
  Poly n;
  for (const auto& [m, c] : a.num_) poly_acc(n, m * fa, c);
  for (const auto& [m, c] : b.num_) poly_acc(n, m * fb, c);
  r.num_ = std::move(n);
  r.den_ = l;
  r.canonicalize();
  return r;
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar Scalar::operator-() const {
  Scalar r = *this;
  for (auto& [m, c] : r.num_) c = -c;
  return r;
}

Scalar operator*(const Scalar& a0, const Scalar& b0) {
  Scalar a = a0, b = b0;
  match_rings(a, b);
  Scalar r;
  r.ring_ = a.ring_;
  r.num_ = poly_mul(a.num_, b.num_);
  r.den_ = a.den_ * b.den_;
  r.canonicalize();
  return r;
}

Scalar operator/(const Scalar& a0, const Scalar& b0) {
  Scalar a = a0, b = b0;
  match_rings(a, b);
  if (b.is_zero()) throw std::domain_error("Scalar: division by zero");
  return a * b.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) { return (a - b).is_zero(); }

std::string Scalar::str() const {
  if (num_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // highest monomial first
  for (auto it = num_.rbegin(); it != num_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rat a = c.abs();
    if (first) {
      if (c.is_negative()) os << "-";
      first = false;
    } else {
      os << (c.is_negative() ? " - " : " + ");
    }
    bool printed = false;
    if (!(a.is_one()) || m.trivial()) {
      os << a.str();
      printed = true;
    }
    for (SymId s = 0; s < static_cast<SymId>(m.size()); ++s) {
      if (m.exp(s) == 0) continue;
      if (printed) os << "*";
      os << ring_->info(s).name;
      if (m.exp(s) > 1) os << "^" << m.exp(s);
      printed = true;
    }
  }
  std::string n = os.str();
  if (den_.trivial()) return n;
  if (num_.size() > 1 || n.find(' ') != std::string::npos) n = "(" + n + ")";
  std::ostringstream d;
  int nsym = 0;
  for (SymId s = 0; s < static_cast<SymId>(den_.size()); ++s) {
    if (den_.exp(s) == 0) continue;
    if (nsym) d << "*";
    d << ring_->info(s).name;
    if (den_.exp(s) > 1) d << "^" << den_.exp(s);
    ++nsym;
  }
  std::string ds = d.str();
  if (nsym > 1) ds = "(" + ds + ")";
  return n + "/" + ds;
}

double Scalar::eval(const std::vector<double>& v) const {
  auto mono = [&](const Monomial& m) {
    double p = 1.0;
    for (SymId s = 0; s < static_cast<SymId>(m.size()); ++s)
      for (int k = 0; k < m.exp(s); ++k) p *= v[static_cast<std::size_t>(s)];
    return p;
  };
  double n = 0.0;
  for (const auto& [m, c] : num_) n += c.to_double() * mono(m);
  return n / mono(den_);
}

// ------------------------------------------------------------------ Ring

const RingPtr& Ring::rationals() {
  static RingPtr r = RingBuilder{}.freeze();
  return r;
}

SymId Ring::find(const std::string& name) const {
  for (SymId s = 0; s < static_cast<SymId>(syms_.size()); ++s)
    if (syms_[static_cast<std::size_t>(s)].name == name) return s;
  return -1;
}

Scalar Ring::sym(SymId s) const {
  Scalar r;
  r.ring_ = shared_from_this();
  Monomial m(size());
  m.set_exp(s, 1);
  r.num_.emplace(std::move(m), Rat(1));
  r.den_ = Monomial(size());
  return r;
}

Scalar Ring::sym(const std::string& name) const {
  SymId s = find(name);
  if (s < 0) throw std::invalid_argument("Ring: unknown symbol " + name);
  return sym(s);
}

Scalar Ring::constant(Rat c) const {
  Scalar r;
  r.ring_ = shared_from_this();
  r.den_ = Monomial(size());
  if (!c.is_zero()) r.num_.emplace(Monomial(size()), c);
  return r;
}

Poly Ring::normalize(Poly p) const {
  bool any = false;
  for (const auto& r : replacement_)
    if (r) {
      any = true;
      break;
    }
  if (!any) return p;
  Poly out;
  std::vector<std::pair<Monomial, Rat>> work(p.begin(), p.end());
  while (!work.empty()) {
    auto [m, c] = work.back();
    work.pop_back();
    SymId hit = -1;
    for (SymId s = 0; s < static_cast<SymId>(m.size()); ++s)
      if (m.exp(s) >= 2 && replacement_[static_cast<std::size_t>(s)]) {
        hit = s;
        break;
      }
    if (hit < 0) {
      poly_acc(out, m, c);
      continue;
    }
    Monomial m2 = m;
    m2.set_exp(hit, m.exp(hit) - 2);
    for (const auto& [rm, rc] : *replacement_[static_cast<std::size_t>(hit)])
      work.emplace_back(m2 * rm, c * rc);
  }
  return out;
}

// ----------------------------------------------------------- RingBuilder

SymId RingBuilder::add_atom(const std::string& name, bool nonvanishing) {
  for (const auto& s : syms_)
    if (s.name == name)
      throw std::invalid_argument("RingBuilder: duplicate symbol " + name);
  syms_.push_back({name, SymKind::Atom, nonvanishing, -1});
  return static_cast<SymId>(syms_.size() - 1);
}

void RingBuilder::link_pair(SymId cos_sym, SymId sin_sym) {
  syms_[static_cast<std::size_t>(cos_sym)].kind = SymKind::Cos;
  syms_[static_cast<std::size_t>(cos_sym)].partner = sin_sym;
  syms_[static_cast<std::size_t>(sin_sym)].kind = SymKind::Sin;
  syms_[static_cast<std::size_t>(sin_sym)].partner = cos_sym;
}

std::pair<SymId, SymId> RingBuilder::add_pair(const std::string& cos_name,
                                              const std::string& sin_name,
                                              bool cos_nonvanishing,
                                              bool sin_nonvanishing) {
  SymId c = add_atom(cos_name, cos_nonvanishing);
  SymId s = add_atom(sin_name, sin_nonvanishing);
  syms_[static_cast<std::size_t>(c)].kind = SymKind::Cos;
  syms_[static_cast<std::size_t>(c)].partner = s;
  syms_[static_cast<std::size_t>(s)].kind = SymKind::Sin;
  syms_[static_cast<std::size_t>(s)].partner = c;
  relations_.push_back({{{c, 2}, {s, 2}}, Rat(1), s});
  return {c, s};
}

std::array<SymId, 3> RingBuilder::add_triple(const std::string& a,
                                             const std::string& b,
                                             const std::string& c) {
  SymId ia = add_atom(a), ib = add_atom(b), ic = add_atom(c);
  for (SymId s : {ia, ib, ic})
    syms_[static_cast<std::size_t>(s)].kind = SymKind::TripleMember;
  relations_.push_back({{{ia, 2}, {ib, 2}, {ic, 2}}, Rat(1), ic});
  return {ia, ib, ic};
}

void RingBuilder::add_relation(const std::vector<Relation::Member>& members,
                               Rat rhs, SymId designated) {
  bool found = false;
  for (const auto& m : members)
    if (m.sym == designated && m.pow == 2) found = true;
  if (!found)
    throw std::invalid_argument("RingBuilder: designated symbol must appear squared");
  relations_.push_back({members, rhs, designated});
}

RingPtr RingBuilder::freeze() {
  auto ring = std::make_shared<Ring>();
  ring->syms_ = syms_;
  ring->relations_ = relations_;
  ring->replacement_.assign(syms_.size(), std::nullopt);
  // designated symbols must be pairwise distinct and absent from every
  // other relation, so the rewrite system is confluent
  for (const auto& rel : relations_) {
    if (ring->replacement_[static_cast<std::size_t>(rel.designated)])
      throw std::invalid_argument("RingBuilder: symbol designated twice");
    Poly rep;
    rep.emplace(Monomial(syms_.size()), rel.rhs);
    for (const auto& m : rel.members) {
      if (m.sym == rel.designated) continue;
      Monomial mono(syms_.size());
      mono.set_exp(m.sym, m.pow);
      poly_acc(rep, mono, Rat(-1));
    }
    ring->replacement_[static_cast<std::size_t>(rel.designated)] = std::move(rep);
  }
  for (const auto& rel : relations_)
    for (const auto& m : rel.members)
      if (m.sym != rel.designated &&
          ring->replacement_[static_cast<std::size_t>(m.sym)])
        throw std::invalid_argument(
            "RingBuilder: designated symbol occurs in another relation");
  return ring;
}

// -------------------------------------------------------------- Morphism

Morphism make_morphism(const RingPtr& from, const RingPtr& to,
                       std::vector<Scalar> images) {
  if (images.size() != from->size())
    throw std::invalid_argument("Morphism: one image per symbol required");
  Morphism m{from, to, std::move(images)};
  for (SymId s = 0; s < static_cast<SymId>(from->size()); ++s) {
    const auto& img = m.images[static_cast<std::size_t>(s)];
    if (img.ring() != to && !img.is_rational())
      throw std::invalid_argument("Morphism: image in wrong ring");
    if (from->info(s).nonvanishing && !img.is_unit())
      throw std::invalid_argument("Morphism: nonvanishing symbol " +
                                  from->info(s).name + " must map to a unit");
  }
  // every source relation must map to zero in the target
  for (const auto& rel : from->relations()) {
    Scalar acc = to->constant(-rel.rhs);
    for (const auto& mem : rel.members)
      acc = acc + m.images[static_cast<std::size_t>(mem.sym)].pow(mem.pow);
    if (!acc.is_zero())
      throw std::invalid_argument("Morphism: relation not preserved");
  }
  return m;
}

Scalar apply(const Morphism& m, const Scalar& x) {
  if (x.ring() == Ring::rationals()) return m.to->constant(x.rat_value());
  if (x.ring() != m.from)
    throw std::invalid_argument("Morphism: value from a different ring");
  auto eval_mono = [&](const Monomial& mono) {
    Scalar p = m.to->constant(Rat(1));
    for (SymId s = 0; s < static_cast<SymId>(mono.size()); ++s)
      if (mono.exp(s) > 0)
        p = p * m.images[static_cast<std::size_t>(s)].pow(mono.exp(s));
    return p;
  };
  Scalar n = m.to->constant(Rat(0));
  for (const auto& [mono, c] : x.num())
    n = n + m.to->constant(c) * eval_mono(mono);
  return n / eval_mono(x.den());
}

PinOutcome pin_sym(const RingPtr& ring, SymId s, const Rat& value) {
  if (s < 0 || s >= static_cast<SymId>(ring->size()))
    throw std::invalid_argument("pin_sym: no such symbol");
  if (ring->info(s).nonvanishing && value.is_zero())
    throw std::domain_error("pin_sym: symbol " + ring->info(s).name +
                            " is assumed nonvanishing");

  // collect pins forced by relations that become linear
  std::vector<std::pair<SymId, Rat>> pins{{s, value}};
  bool contradiction = false;
  std::string note;

  RingBuilder rb;
  std::vector<SymId> old_to_new(ring->size(), -1);
  for (SymId i = 0; i < static_cast<SymId>(ring->size()); ++i) {
    if (i == s) continue;
    const auto& si = ring->info(i);
    old_to_new[static_cast<SymId>(i)] = rb.add_atom(si.name, si.nonvanishing);
  }
  // pairs survive with their bookkeeping when neither member was pinned
  for (SymId i = 0; i < static_cast<SymId>(ring->size()); ++i) {
    const auto& si = ring->info(i);
    if (si.kind != SymKind::Cos) continue;
    SymId nc = old_to_new[static_cast<std::size_t>(i)];
    SymId ns = si.partner < 0 ? -1 : old_to_new[static_cast<std::size_t>(si.partner)];
    if (nc >= 0 && ns >= 0) rb.link_pair(nc, ns);
  }
  for (const auto& rel : ring->relations()) {
    std::vector<Relation::Member> rest;
    Rat rhs = rel.rhs;
    for (const auto& mem : rel.members) {
      if (mem.sym == s) {
        Rat v = value;
        for (int k = 1; k < mem.pow; ++k) v *= value;
        rhs -= v;
      } else {
        rest.push_back(mem);
      }
    }
    if (rest.size() == rel.members.size()) {
      // untouched relation
      std::vector<Relation::Member> mapped;
      for (const auto& mem : rest)
        mapped.push_back({old_to_new[static_cast<std::size_t>(mem.sym)], mem.pow});
      rb.add_relation(mapped, rhs,
                      old_to_new[static_cast<std::size_t>(rel.designated)]);
      continue;
    }
    if (rest.empty()) {
      if (!rhs.is_zero()) {
        contradiction = true;
        note = "relation forces " + rhs.str() + " = 0";
      }
      continue;
    }
    SymId desig = -1;
    for (const auto& mem : rest)
      if (mem.pow == 2 && mem.sym == rel.designated) desig = mem.sym;
    if (desig < 0)
      for (const auto& mem : rest)
        if (mem.pow == 2) desig = mem.sym;
    if (desig >= 0) {
      std::vector<Relation::Member> mapped;
      for (const auto& mem : rest)
        mapped.push_back({old_to_new[static_cast<std::size_t>(mem.sym)], mem.pow});
      rb.add_relation(mapped, rhs, old_to_new[static_cast<std::size_t>(desig)]);
      continue;
    }
    // only degree-one members remain: a single leftover atom is forced
    if (rest.size() == 1 && rest[0].pow == 1) {
      pins.emplace_back(rest[0].sym, rhs);
      continue;
    }
    throw std::domain_error("pin_sym: relation left underdetermined");
  }

  RingPtr target = rb.freeze();
  std::vector<Scalar> images(ring->size());
  for (SymId i = 0; i < static_cast<SymId>(ring->size()); ++i) {
    if (i == s)
      images[static_cast<std::size_t>(i)] = target->constant(value);
    else
      images[static_cast<std::size_t>(i)] =
          target->sym(old_to_new[static_cast<std::size_t>(i)]);
  }
  PinOutcome out;
  out.contradiction = contradiction;
  out.note = note;
  out.ring = target;
  out.map = Morphism{ring, target, std::move(images)};
  // chase forced pins (e.g. rho once both angles are fixed)
  for (std::size_t i = 1; i < pins.size(); ++i) {
    SymId ns = out.ring->find(ring->info(pins[i].first).name);
    if (out.ring->info(ns).nonvanishing && pins[i].second.is_zero())
      throw std::domain_error("pin_sym: relation forces nonvanishing symbol " +
                              out.ring->info(ns).name + " to zero");
    PinOutcome next = pin_sym(out.ring, ns, pins[i].second);
    std::vector<Scalar> comp(out.map.images.size());
    for (std::size_t k = 0; k < comp.size(); ++k)
      comp[k] = apply(next.map, out.map.images[k]);
    out.ring = next.ring;
    out.map = Morphism{ring, next.ring, std::move(comp)};
    out.contradiction = out.contradiction || next.contradiction;
    if (!next.note.empty()) out.note = next.note;
  }
  if (!out.contradiction)
    out.map = make_morphism(ring, out.ring, std::move(out.map.images));
  return out;
}

RingPtr with_nonvanishing(const RingPtr& ring, SymId s) {
  // symbol ids are unchanged, so relations and pairings copy verbatim
  RingBuilder rb;
  for (SymId i = 0; i < static_cast<SymId>(ring->size()); ++i) {
    const auto& si = ring->info(i);
    rb.add_atom(si.name, si.nonvanishing || i == s);
  }
  for (SymId i = 0; i < static_cast<SymId>(ring->size()); ++i)
    if (ring->info(i).kind == SymKind::Cos && ring->info(i).partner >= 0)
      rb.link_pair(i, ring->info(i).partner);
  for (const auto& rel : ring->relations())
    rb.add_relation(rel.members, rel.rhs, rel.designated);
  return rb.freeze();
}

// -------------------------------------------------------------- parsing

namespace {

struct Parser {
  const Ring& ring;
  const std::string& text;
  std::size_t pos = 0;

  void skip() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }
  bool eat(char c) {
    skip();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  char peek() {
    skip();
    return pos < text.size() ? text[pos] : '\0';
  }

  Scalar parse_expr() {
    skip();
    bool neg = eat('-');
    Scalar v = parse_term();
    if (neg) v = -v;
    for (;;) {
      if (eat('+'))
        v = v + parse_term();
      else if (eat('-'))
        v = v - parse_term();
      else
        return v;
    }
  }
  Scalar parse_term() {
    Scalar v = parse_factor();
    for (;;) {
      if (eat('*'))
        v = v * parse_factor();
      else if (eat('/'))
        v = v / parse_factor();
      else
        return v;
    }
  }
  Scalar parse_factor() {
    Scalar v = parse_primary();
    if (eat('^')) {
      skip();
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        ++pos;
      if (start == pos) throw std::invalid_argument("parse: exponent expected");
      v = v.pow(std::stoi(text.substr(start, pos - start)));
    }
    return v;
  }
  Scalar parse_primary() {
    skip();
    if (eat('(')) {
      Scalar v = parse_expr();
      if (!eat(')')) throw std::invalid_argument("parse: ')' expected");
      return v;
    }
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        ++pos;
      return ring.constant(Rat(std::stoll(text.substr(start, pos - start))));
    }
    if (pos < text.size() &&
        (std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
      std::size_t start = pos;
      while (pos < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
        ++pos;
      return ring.sym(text.substr(start, pos - start));
    }
    throw std::invalid_argument("parse: unexpected input at '" +
                                text.substr(pos) + "'");
  }
};

}  // namespace

Scalar Ring::parse(const std::string& text) const {
  Parser p{*this, text};
  Scalar v = p.parse_expr();
  p.skip();
  if (p.pos != text.size())
    throw std::invalid_argument("parse: trailing input in '" + text + "'");
  return v;
}

}  // namespace nk
