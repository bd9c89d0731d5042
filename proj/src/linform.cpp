#include "nk/linform.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace nk {

// ---------------------------------------------------------------- Unknown

Unknown Unknown::h(int i, int j) {
  if (i < 1 || i > 5 || j < 1 || j > 5)
    throw std::invalid_argument("Unknown::h: index out of range");
  if (i > j) std::swap(i, j);
  return Unknown(static_cast<std::uint16_t>((i - 1) * 5 + (j - 1)));
}

Unknown Unknown::deriv(int dir, int fn) {
  if (dir < 1 || dir > 5 || fn < 0 || fn > 2)
    throw std::invalid_argument("Unknown::deriv: index out of range");
  return Unknown(static_cast<std::uint16_t>(100 + (dir - 1) * 3 + fn));
}

int Unknown::row() const {
  return code_ < 100 ? code_ / 5 + 1 : (code_ - 100) / 3 + 1;
}

int Unknown::col() const {
  return code_ < 100 ? code_ % 5 + 1 : (code_ - 100) % 3;
}

std::string Unknown::name() const {
  if (is_h()) return "h" + std::to_string(row()) + std::to_string(col());
  return "D" + std::to_string(row()) + std::string(1, "abc"[col()]);
}

std::optional<Unknown> Unknown::from_name(const std::string& s) {
  if (s.size() == 3 && s[0] == 'h' && std::isdigit(s[1]) && std::isdigit(s[2])) {
    int i = s[1] - '0', j = s[2] - '0';
    if (i >= 1 && i <= 5 && j >= 1 && j <= 5) return h(i, j);
  }
  if (s.size() == 3 && s[0] == 'D' && std::isdigit(s[1])) {
    int d = s[1] - '0';
    int fn = s[2] == 'a' ? 0 : s[2] == 'b' ? 1 : s[2] == 'c' ? 2 : -1;
    if (d >= 1 && d <= 5 && fn >= 0) return deriv(d, fn);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- LinForm

LinForm LinForm::unknown(Unknown u, Scalar coeff) {
  LinForm f;
  if (!coeff.is_zero()) f.coeffs_.emplace(u, std::move(coeff));
  return f;
}

Scalar LinForm::coeff(Unknown u) const {
  auto it = coeffs_.find(u);
  return it == coeffs_.end() ? Scalar() : it->second;
}

void LinForm::tidy() {
  for (auto it = coeffs_.begin(); it != coeffs_.end();)
    it = it->second.is_zero() ? coeffs_.erase(it) : std::next(it);
}

LinForm operator+(const LinForm& a, const LinForm& b) {
  LinForm r = a;
  for (const auto& [u, c] : b.coeffs_) {
    auto it = r.coeffs_.find(u);
    if (it == r.coeffs_.end())
      r.coeffs_.emplace(u, c);
    else
      it->second = it->second + c;
  }
  r.constant_ = r.constant_ + b.constant_;
  r.tidy();
  return r;
}

LinForm operator-(const LinForm& a, const LinForm& b) { return a + (-b); }

LinForm LinForm::operator-() const {
  LinForm r = *this;
  for (auto& [u, c] : r.coeffs_) c = -c;
  r.constant_ = -r.constant_;
  return r;
}

LinForm operator*(const Scalar& c, const LinForm& f) {
  LinForm r;
  for (const auto& [u, k] : f.coeffs_) r.coeffs_.emplace(u, c * k);
  r.constant_ = c * f.constant_;
  r.tidy();
  return r;
}

bool operator==(const LinForm& a, const LinForm& b) { return (a - b).is_zero(); }

LinForm LinForm::substituted(const std::map<Unknown, LinForm>& rel) const {
  LinForm r(constant_);
  for (const auto& [u, c] : coeffs_) {
    auto it = rel.find(u);
    if (it == rel.end())
      r = r + LinForm::unknown(u, c);
    else
      r = r + c * it->second;
  }
  return r;
}

std::string LinForm::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const Scalar& c, const std::string& name) {
    std::string cs = c.str();
    bool neg = !cs.empty() && cs[0] == '-';
    if (neg) cs = (-c).str();
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    if (name.empty()) {
      bool atomic = cs.find(' ') == std::string::npos;
      os << (atomic || !neg ? cs : "(" + cs + ")");
      return;
    }
    if (cs == "1") {
      os << name;
    } else {
      bool atomic = cs.find(' ') == std::string::npos;
      os << (atomic ? cs : "(" + cs + ")") << "*" << name;
    }
  };
  for (const auto& [u, c] : coeffs_) emit(c, u.name());
  if (!constant_.is_zero()) emit(constant_, "");
  return os.str();
}

LinForm apply(const Morphism& m, const LinForm& f) {
  LinForm r(apply(m, f.constant()));
  for (const auto& [u, c] : f.coeffs()) r = r + LinForm::unknown(u, apply(m, c));
  return r;
}

// ---------------------------------------------------------------- parsing

namespace {

struct LinParser {
  const RingPtr& ring;
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

  LinForm expr() {
    skip();
    bool neg = eat('-');
    LinForm v = term();
    if (neg) v = -v;
    for (;;) {
      if (eat('+'))
        v = v + term();
      else if (eat('-'))
        v = v - term();
      else
        return v;
    }
  }
  LinForm term() {
    LinForm v = factor();
    for (;;) {
      if (eat('*')) {
        v = mul(v, factor());
      } else if (eat('/')) {
        LinForm d = factor();
        if (!d.is_constant())
          throw std::invalid_argument("linform parse: division by unknowns");
        v = d.constant().inverse() * v;
      } else {
        return v;
      }
    }
  }
  static LinForm mul(const LinForm& a, const LinForm& b) {
    if (a.is_constant()) return a.constant() * b;
    if (b.is_constant()) return b.constant() * a;
    throw std::invalid_argument("linform parse: product of unknowns");
  }
  LinForm factor() {
    LinForm v = primary();
    if (eat('^')) {
      skip();
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        ++pos;
      if (start == pos) throw std::invalid_argument("linform parse: exponent");
      int k = std::stoi(text.substr(start, pos - start));
      if (!v.is_constant())
        throw std::invalid_argument("linform parse: power of an unknown");
      return LinForm(v.constant().pow(k));
    }
    return v;
  }
  LinForm primary() {
    skip();
    if (eat('(')) {
      LinForm v = expr();
      if (!eat(')')) throw std::invalid_argument("linform parse: ')' expected");
      return v;
    }
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        ++pos;
      return LinForm(ring->constant(Rat(std::stoll(text.substr(start, pos - start)))));
    }
    if (pos < text.size() &&
        (std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
      std::size_t start = pos;
      while (pos < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
        ++pos;
      std::string name = text.substr(start, pos - start);
      if (auto u = Unknown::from_name(name)) return LinForm::unknown(*u);
      return LinForm(ring->sym(name));
    }
    throw std::invalid_argument("linform parse: unexpected input at '" +
                                text.substr(pos) + "'");
  }
};

}  // namespace

LinForm parse_linform(const RingPtr& ring, const std::string& text) {
  LinParser p{ring, text};
  LinForm v = p.expr();
  p.skip();
  if (p.pos != text.size())
    throw std::invalid_argument("linform parse: trailing input in '" + text + "'");
  return v;
}

// ------------------------------------------------------------- Eliminator

void Eliminator::add(const LinForm& eq) {
  LinForm r = eq.substituted(state_.solved);
  if (r.is_zero()) return;
  if (r.is_constant()) {
    if (r.constant().is_unit()) {
      state_.contradiction = true;
      state_.contradiction_detail = r.constant().str() + " = 0";
    } else {
      state_.constraints.push_back(r.constant());
    }
    return;
  }
  state_.deferred.push_back(r);
  sweep();
}

void Eliminator::sweep() {
  for (;;) {
    // pivot preference: rational constant, then unit; solve for the largest
    // unknown so h22 stays the free representative of an equal block
    int best_eq = -1;
    std::optional<Unknown> best_u;
    int best_class = 99;
    for (std::size_t e = 0; e < state_.deferred.size(); ++e) {
      for (const auto& [u, c] : state_.deferred[e].coeffs()) {
        int cls = c.is_rational() ? 0 : c.is_unit() ? 1 : 99;
        if (cls > 1) continue;
        bool better = false;
        if (cls < best_class)
          better = true;
        else if (cls == best_class && (!best_u || *best_u < u))
          better = true;
        if (better) {
          best_class = cls;
          best_eq = static_cast<int>(e);
          best_u = u;
        }
      }
    }
    if (best_eq < 0) return;

    LinForm eq = state_.deferred[static_cast<std::size_t>(best_eq)];
    state_.deferred.erase(state_.deferred.begin() + best_eq);
    Unknown u = *best_u;
    Scalar pivot = eq.coeff(u);
    LinForm rhs = Scalar(Rat(-1)) * pivot.inverse() * (eq - LinForm::unknown(u, pivot));

    // keep the triangular set back-substituted
    for (auto& [v, f] : state_.solved) {
      std::map<Unknown, LinForm> one{{u, rhs}};
      f = f.substituted(one);
    }
    state_.solved.emplace(u, rhs);

    std::vector<LinForm> rest;
    rest.swap(state_.deferred);
    for (const auto& d : rest) {
      LinForm r = d.substituted(state_.solved);
      if (r.is_zero()) continue;
      if (r.is_constant()) {
        if (r.constant().is_unit()) {
          state_.contradiction = true;
          state_.contradiction_detail = r.constant().str() + " = 0";
        } else {
          state_.constraints.push_back(r.constant());
        }
        continue;
      }
      state_.deferred.push_back(r);
    }
  }
}

SolveResult eliminate(const EqSystem& sys) {
  Eliminator el(sys.ring);
  for (const auto& stage : sys.stages)
    for (const auto& eq : stage) el.add(eq);
  return el.result();
}

// --------------------------------------------------------- prove_by_cases

namespace {

// exact division of p by a divisor linear in a single symbol with rational
// coefficients (alpha*v + beta); returns nothing when not divisible
std::optional<Scalar> try_divide_linear(const Scalar& p, const Scalar& atom) {
  if (p.is_zero()) return p;
  if (!p.den().trivial()) return std::nullopt;
  const RingPtr& ring = p.ring();
  // decompose atom = alpha*v + beta
  SymId v = -1;
  Rat alpha(0), beta(0);
  if (atom.ring() != ring || !atom.den().trivial()) return std::nullopt;
  for (const auto& [m, c] : atom.num()) {
    if (m.trivial()) {
      beta = c;
      continue;
    }
    if (m.degree() != 1) return std::nullopt;
    for (SymId s = 0; s < static_cast<SymId>(m.size()); ++s)
      if (m.exp(s) == 1) {
        if (v >= 0 && v != s) return std::nullopt;
        v = s;
        alpha = c;
      }
  }
  if (v < 0 || alpha.is_zero()) return std::nullopt;

  // collect p by powers of v, coefficients are polynomials in the rest
  int maxdeg = 0;
  for (const auto& [m, c] : p.num()) maxdeg = std::max(maxdeg, m.exp(v));
  std::vector<Scalar> by_deg(static_cast<std::size_t>(maxdeg) + 1,
                             ring->constant(Rat(0)));
  for (const auto& [m, c] : p.num()) {
    Monomial m2 = m;
    int d = m.exp(v);
    m2.set_exp(v, 0);
    Scalar t;
    {
      Scalar s = ring->constant(c);
      Scalar mono = ring->constant(Rat(1));
      for (SymId q = 0; q < static_cast<SymId>(m2.size()); ++q)
        mono = mono * ring->sym(q).pow(m2.exp(q));
      t = s * mono;
    }
    by_deg[static_cast<std::size_t>(d)] = by_deg[static_cast<std::size_t>(d)] + t;
  }
  // synthetic division from the top degree down
  std::vector<Scalar> quot(static_cast<std::size_t>(maxdeg), ring->constant(Rat(0)));
  Scalar ai = ring->constant(Rat(1) / alpha);
  for (int d = maxdeg; d >= 1; --d) {
    Scalar q = by_deg[static_cast<std::size_t>(d)] * ai;
    quot[static_cast<std::size_t>(d - 1)] = q;
    by_deg[static_cast<std::size_t>(d)] = ring->constant(Rat(0));
    by_deg[static_cast<std::size_t>(d - 1)] =
        by_deg[static_cast<std::size_t>(d - 1)] - q * ring->constant(beta);
  }
  if (!by_deg[0].is_zero()) return std::nullopt;
  Scalar result = ring->constant(Rat(0));
  for (int d = 0; d < maxdeg; ++d)
    result = result + quot[static_cast<std::size_t>(d)] * ring->sym(v).pow(d);
  return result;
}

// divide an entire equation by the split atom while every coefficient allows it
LinForm cancel_factor(const LinForm& eq, const Scalar& atom) {
  LinForm cur = eq;
  while (!cur.is_zero()) {
    bool ok = true;
    Scalar c0 = cur.constant();
    std::optional<Scalar> dc = c0.is_zero() ? std::optional<Scalar>(c0)
                                            : try_divide_linear(c0, atom);
    if (!dc) break;
    LinForm cand(*dc);
    for (const auto& [u, c] : cur.coeffs()) {
      auto d = try_divide_linear(c, atom);
      if (!d) {
        ok = false;
        break;
      }
      cand = cand + LinForm::unknown(u, *d);
    }
    if (!ok) break;
    cur = cand;
  }
  return cur;
}

BranchTrace run_branch(const std::string& label, const RingPtr& ring,
                       const std::vector<LinForm>& eqs, Unknown target) {
  BranchTrace t;
  t.label = label;
  for (const auto& e : eqs) t.equations.push_back(e.str());
  SolveResult res = eliminate(EqSystem::single_stage(ring, eqs));
  auto it = res.solved.find(target);
  t.target_zero = it != res.solved.end() && it->second.is_zero();
  if (!t.target_zero)
    for (const auto& d : res.deferred) t.residual.push_back(d.str());
  return t;
}

}  // namespace

CaseProof prove_by_cases(const EqSystem& sys, Unknown target,
                         const std::optional<CaseSplit>& split) {
  CaseProof proof{false, target, "", {}};
  std::vector<LinForm> eqs;
  for (const auto& st : sys.stages) eqs.insert(eqs.end(), st.begin(), st.end());

  if (!split) {
    proof.branches.push_back(run_branch("direct", sys.ring, eqs, target));
    proof.closed = proof.branches[0].target_zero;
    return proof;
  }
  proof.split_text = split->atom.str();

  // branch 1: split != 0, cancel it from every equation
  std::vector<LinForm> cancelled;
  for (const auto& e : eqs) cancelled.push_back(cancel_factor(e, split->atom));
  proof.branches.push_back(run_branch(proof.split_text + " != 0", sys.ring,
                                      cancelled, target));

  // branch 2: split = 0, substitute the solved symbol value
  PinOutcome pin = pin_sym(sys.ring, split->var, split->value);
  std::vector<LinForm> pinned;
  for (const auto& e : eqs) pinned.push_back(apply(pin.map, e));
  proof.branches.push_back(run_branch(
      sys.ring->info(split->var).name + " = " + split->value.str(), pin.ring,
      pinned, target));

  proof.closed =
      proof.branches[0].target_zero && proof.branches[1].target_zero;
  return proof;
}

bool replay(const CaseProof& proof, const RingPtr& ring) {
  for (const auto& br : proof.branches) {
    RingPtr r = ring;
    if (!proof.split_text.empty() && &br == &proof.branches[1]) {
      // the recorded equations of the zero branch live in the pinned ring;
      // rebuild it from the branch label "sym = value"
      auto eq = br.label.find('=');
      std::string name = br.label.substr(0, eq);
      while (!name.empty() && name.back() == ' ') name.pop_back();
      std::string val = br.label.substr(eq + 1);
      std::size_t slash = val.find('/');
      Rat v = slash == std::string::npos
                  ? Rat(std::stoll(val))
                  : Rat(std::stoll(val.substr(0, slash)),
                        std::stoll(val.substr(slash + 1)));
      r = pin_sym(ring, ring->find(name), v).ring;
    }
    std::vector<LinForm> eqs;
    for (const auto& text : br.equations) eqs.push_back(parse_linform(r, text));
    SolveResult res = eliminate(EqSystem::single_stage(r, eqs));
    auto it = res.solved.find(proof.target);
    if (it == res.solved.end() || !it->second.is_zero()) return false;
  }
  return true;
}

// -------------------------------------------------------- match_up_to_unit

namespace {

// ratio p/q restricted to unit values (rational times a monomial in
// nonvanishing symbols); verified exactly by cross multiplication
std::optional<Scalar> unit_ratio(const Scalar& p, const Scalar& q) {
  if (q.is_zero()) return std::nullopt;
  if (p.is_zero()) return std::nullopt;
  if (q.is_unit()) {
    Scalar k = p * q.inverse();
    if (k.is_unit()) return k;
    return std::nullopt;
  }
  // leading-term ratio candidate
  const auto& [mp, cp] = *p.num().rbegin();
  const auto& [mq, cq] = *q.num().rbegin();
  const RingPtr& ring = p.ring();
  Scalar k = ring->constant(cp / cq);
  for (SymId s = 0; s < static_cast<SymId>(ring->size()); ++s) {
    int d = mp.exp(s) - mq.exp(s) - p.den().exp(s) + q.den().exp(s);
    if (d > 0)
      k = k * ring->sym(s).pow(d);
    else if (d < 0)
      k = k / ring->sym(s).pow(-d);  // throws unless invertible
  }
  if (!(p == k * q)) return std::nullopt;
  if (!k.is_unit()) return std::nullopt;
  return k;
}

}  // namespace

MatchResult match_up_to_unit(const LinForm& computed, const LinForm& expected) {
  MatchResult r;
  if (computed.is_zero() && expected.is_zero()) {
    r.matched = true;
    r.kappa = Scalar(Rat(1));
    return r;
  }
  if (computed.is_zero() != expected.is_zero()) {
    r.diff = "computed = " + computed.str() + " vs expected = " + expected.str();
    return r;
  }
  // determine kappa from the first unknown present in both
  std::optional<Scalar> kappa;
  for (const auto& [u, ec] : expected.coeffs()) {
    Scalar cc = computed.coeff(u);
    if (cc.is_zero()) {
      r.diff = "unknown " + u.name() + " missing from computed form";
      return r;
    }
    std::optional<Scalar> k;
    try {
      k = unit_ratio(cc, ec);
    } catch (const std::exception&) {
      k = std::nullopt;
    }
    if (!k) {
      r.diff = "coefficient of " + u.name() + " is not a unit multiple: " +
               cc.str() + " vs " + ec.str();
      return r;
    }
    kappa = k;
    break;
  }
  if (!kappa && !expected.constant().is_zero()) {
    try {
      kappa = unit_ratio(computed.constant(), expected.constant());
    } catch (const std::exception&) {
      kappa = std::nullopt;
    }
  }
  if (!kappa) {
    r.diff = "no usable unknown to determine the unit factor";
    return r;
  }
  LinForm delta = computed - *kappa * expected;
  if (!delta.is_zero()) {
    r.diff = "computed - kappa*expected = " + delta.str() + " with kappa = " +
             kappa->str();
    return r;
  }
  r.matched = true;
  r.kappa = *kappa;
  return r;
}

}  // namespace nk
