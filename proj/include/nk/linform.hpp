// Affine-linear expressions in the formal unknowns h(i,j) (shape operator
// components, symmetric, 1 <= i <= j <= 5) and deriv(dir, f) (directional
// derivatives of the coefficient functions a, b, c), with Scalar coefficients.
// Includes staged Gaussian elimination with unit-pivot discipline, a scripted
// case-splitting prover, and matching of linear forms up to a unit factor.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nk/scalar.hpp"

namespace nk {

class Unknown {
public:
  static Unknown h(int i, int j);          // 1 <= i,j <= 5, stored with i <= j
  static Unknown deriv(int dir, int fn);   // dir 1..5, fn 0=a 1=b 2=c
  static std::optional<Unknown> from_name(const std::string& name);

  bool is_h() const { return code_ < 100; }
  int row() const;  // h: i,  deriv: dir
  int col() const;  // h: j,  deriv: fn
  std::string name() const;

  friend bool operator==(const Unknown& a, const Unknown& b) = default;
  friend bool operator<(const Unknown& a, const Unknown& b) {
    return a.code_ < b.code_;
  }

private:
  explicit Unknown(std::uint16_t c) : code_(c) {}
  std::uint16_t code_ = 0;
};

class LinForm {
public:
  LinForm() = default;  // zero
  explicit LinForm(Scalar constant) : constant_(std::move(constant)) {}
  static LinForm unknown(Unknown u, Scalar coeff = Scalar(Rat(1)));

  const std::map<Unknown, Scalar>& coeffs() const { return coeffs_; }
  const Scalar& constant() const { return constant_; }
  Scalar coeff(Unknown u) const;

  bool is_zero() const { return coeffs_.empty() && constant_.is_zero(); }
  bool is_constant() const { return coeffs_.empty(); }

  friend LinForm operator+(const LinForm& a, const LinForm& b);
  friend LinForm operator-(const LinForm& a, const LinForm& b);
  friend LinForm operator*(const Scalar& c, const LinForm& f);
  LinForm operator-() const;
  friend bool operator==(const LinForm& a, const LinForm& b);

  // replace unknowns that have entries in rel by their forms
  LinForm substituted(const std::map<Unknown, LinForm>& rel) const;

  std::string str() const;

private:
  void tidy();
  std::map<Unknown, Scalar> coeffs_;
  Scalar constant_;
};

LinForm parse_linform(const RingPtr& ring, const std::string& text);
LinForm apply(const Morphism& m, const LinForm& f);

// Equation system with stage boundaries (the paper's dotted lines): equations
// of a stage are solved only with the substitutions of earlier stages.
struct EqSystem {
  RingPtr ring;
  std::vector<std::vector<LinForm>> stages;

  static EqSystem single_stage(RingPtr ring, std::vector<LinForm> eqs) {
    return {std::move(ring), {std::move(eqs)}};
  }
};

struct SolveResult {
  std::map<Unknown, LinForm> solved;   // triangular, fully back-substituted
  std::vector<LinForm> deferred;       // no admissible pivot (possibly-zero coeff)
  std::vector<Scalar> constraints;     // constant residuals, nonzero non-units
  bool contradiction = false;          // constant residual that is a unit
  std::string contradiction_detail;

  LinForm reduce(const LinForm& f) const { return f.substituted(solved); }
};

SolveResult eliminate(const EqSystem& sys);

// Incremental elimination: feed equations one group at a time.
class Eliminator {
public:
  explicit Eliminator(RingPtr ring) : ring_(std::move(ring)) {}
  void add(const LinForm& eq);
  const SolveResult& result() const { return state_; }
  SolveResult& result() { return state_; }
  const RingPtr& ring() const { return ring_; }

private:
  void sweep();
  RingPtr ring_;
  SolveResult state_;
};

// Two-branch certificate for: system + (split = 0 | split != 0)  =>  target = 0.
struct BranchTrace {
  std::string label;
  std::vector<std::string> equations;  // post-transformation, canonical text
  bool target_zero = false;
  std::vector<std::string> residual;   // deferred equations if the branch fails
};

struct CaseProof {
  bool closed = false;
  Unknown target;
  std::string split_text;  // empty when no split was needed
  std::vector<BranchTrace> branches;
};

struct CaseSplit {
  Scalar atom;  // polynomial assumed nonzero on one branch
  SymId var;    // symbol solved by atom = 0 on the other branch
  Rat value;
};

CaseProof prove_by_cases(const EqSystem& sys, Unknown target,
                         const std::optional<CaseSplit>& split);

// Re-execute the recorded branch equations and confirm both still force the
// target to vanish.
bool replay(const CaseProof& proof, const RingPtr& ring);

struct MatchResult {
  bool matched = false;
  Scalar kappa;      // computed = kappa * expected
  std::string diff;  // structured mismatch description
};

MatchResult match_up_to_unit(const LinForm& computed, const LinForm& expected);

}  // namespace nk
