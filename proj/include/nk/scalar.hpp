// Exact coefficient field: rationals extended by constrained symbols.
//
// A Ring declares symbols (free atoms, cos/sin pairs, unit triples) together
// with their sum-of-squares relations.  Each relation designates one symbol
// whose square is rewritten away, which keeps polynomial normal forms unique:
//   sin^2   -> 1 - cos^2          (pair)
//   c^2     -> 1 - a^2 - b^2      (unit triple a,b,c)
//   th2^2   -> 1 - th1^2 - rho    (attached relation of a free atom)
// The designated symbols of distinct relations never interact, so exponent
// reduction is a Groebner-basis reduction and zero testing is decidable.
//
// A Scalar is num/den where den is a monomial in symbols flagged nonvanishing;
// such Scalars are exactly the ones we ever need to invert (sec t, csc 2th2,
// 1/sin th, 1/rho).  All values are immutable.
#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nk/rational.hpp"

namespace nk {

using SymId = int;

enum class SymKind { Atom, Cos, Sin, TripleMember };

struct SymInfo {
  std::string name;
  SymKind kind = SymKind::Atom;
  bool nonvanishing = false;
  SymId partner = -1;  // cos<->sin pairing
};

// Monomial over a ring's symbols, dense exponent vector.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::size_t nsyms) : e_(nsyms, 0) {}

  int exp(SymId s) const { return e_[static_cast<std::size_t>(s)]; }
  void set_exp(SymId s, int k) {
    e_[static_cast<std::size_t>(s)] = static_cast<std::uint8_t>(k);
  }
  std::size_t size() const { return e_.size(); }
  bool trivial() const {
    for (auto x : e_)
      if (x) return false;
    return true;
  }
  int degree() const {
    int d = 0;
    for (auto x : e_) d += x;
    return d;
  }
  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r(a.e_.size());
    for (std::size_t i = 0; i < a.e_.size(); ++i)
      r.e_[i] = static_cast<std::uint8_t>(a.e_[i] + b.e_[i]);
    return r;
  }
  friend bool operator==(const Monomial& a, const Monomial& b) = default;
  friend bool operator<(const Monomial& a, const Monomial& b) {
    return a.e_ < b.e_;
  }

private:
  std::vector<std::uint8_t> e_;
};

// Sparse polynomial: monomial -> nonzero rational coefficient.
using Poly = std::map<Monomial, Rat>;

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

class Scalar {
public:
  Scalar();                       // exact zero over the rationals
  explicit Scalar(Rat r);         // rational constant
  Scalar(std::int64_t n) : Scalar(Rat(n)) {}

  const RingPtr& ring() const { return ring_; }
  const Poly& num() const { return num_; }
  const Monomial& den() const { return den_; }

  bool is_zero() const { return num_.empty(); }
  bool is_rational() const;
  Rat rat_value() const;  // throws unless is_rational()
  // Unit = provably nonzero, hence invertible: a single monomial in
  // nonvanishing symbols with a nonzero rational coefficient.
  bool is_unit() const;
  Scalar inverse() const;  // throws unless is_unit()
  Scalar pow(int k) const; // k >= 0

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar operator-() const;
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  std::string str() const;
  double eval(const std::vector<double>& sym_values) const;

private:
  friend class Ring;
  friend Scalar apply(const struct Morphism&, const Scalar&);

  void canonicalize();

  RingPtr ring_;
  Poly num_;
  Monomial den_;  // implicit coefficient 1; symbols all nonvanishing
};

// Sum-of-squares relation: sum of sym^pow terms equals a rational constant.
struct Relation {
  struct Member {
    SymId sym;
    int pow;  // 1 or 2
  };
  std::vector<Member> members;
  Rat rhs = Rat(1);
  SymId designated = -1;  // member with pow 2 rewritten by normalize
};

class Ring : public std::enable_shared_from_this<Ring> {
public:
  static const RingPtr& rationals();

  std::size_t size() const { return syms_.size(); }
  const SymInfo& info(SymId s) const { return syms_[static_cast<std::size_t>(s)]; }
  const std::vector<Relation>& relations() const { return relations_; }
  SymId find(const std::string& name) const;  // -1 if absent

  Scalar sym(SymId s) const;
  Scalar sym(const std::string& name) const;
  Scalar constant(Rat r) const;
  Scalar parse(const std::string& text) const;

  Poly normalize(Poly p) const;
  bool designated(SymId s) const { return replacement_[static_cast<std::size_t>(s)].has_value(); }
  const Poly* square_replacement(SymId s) const {
    const auto& r = replacement_[static_cast<std::size_t>(s)];
    return r ? &*r : nullptr;
  }

private:
  friend class RingBuilder;

  std::vector<SymInfo> syms_;
  std::vector<Relation> relations_;
  // replacement_[s] = poly that s^2 rewrites to, when s is designated
  std::vector<std::optional<Poly>> replacement_;
};

class RingBuilder {
public:
  SymId add_atom(const std::string& name, bool nonvanishing = false);
  // restore cos/sin bookkeeping on symbols added through add_atom
  void link_pair(SymId cos_sym, SymId sin_sym);
  // cos/sin pair with sin^2 + cos^2 = 1; the sin symbol is designated
  std::pair<SymId, SymId> add_pair(const std::string& cos_name,
                                   const std::string& sin_name,
                                   bool cos_nonvanishing = false,
                                   bool sin_nonvanishing = false);
  // unit triple a^2 + b^2 + c^2 = 1; the third member is designated
  std::array<SymId, 3> add_triple(const std::string& a, const std::string& b,
                                  const std::string& c);
  // general relation sum(sym_i^pow_i) = rhs; designated must appear with pow 2
  void add_relation(const std::vector<Relation::Member>& members, Rat rhs,
                    SymId designated);

  RingPtr freeze();

private:
  std::vector<SymInfo> syms_;
  std::vector<Relation> relations_;
};

// Ring homomorphism determined by per-symbol images.  Construction verifies
// that every source relation maps to zero in the target and that nonvanishing
// symbols map to units.
struct Morphism {
  RingPtr from;
  RingPtr to;
  std::vector<Scalar> images;
};

Morphism make_morphism(const RingPtr& from, const RingPtr& to,
                       std::vector<Scalar> images);
Scalar apply(const Morphism& m, const Scalar& x);

// Substitute one symbol by a rational constant.  The resulting ring drops the
// symbol and updates every relation it belonged to; a relation whose members
// are all pinned inconsistently yields contradiction = true rather than an
// error (this outcome is meaningful: it closes proof branches).
struct PinOutcome {
  RingPtr ring;
  Morphism map;
  bool contradiction = false;
  std::string note;
};

PinOutcome pin_sym(const RingPtr& ring, SymId s, const Rat& value);
RingPtr with_nonvanishing(const RingPtr& ring, SymId s);

}  // namespace nk
