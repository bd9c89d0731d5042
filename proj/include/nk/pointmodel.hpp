// Canonical six-dimensional point model shared by the four ambient spaces.
//
// Basis {f1, Jf1, f2, Jf2, f3, Jf3}, metric = identity, J the standard block
// rotation.  G is generated from G(f1,f2) = f3 by skewness together with
// G(JX,Y) = G(X,JY) = -J G(X,Y), which makes it conjugate-bilinear like the
// cross product on Im(O) restricted to a special unitary frame.  Space type
// alpha is 1 throughout.  Per-space auxiliary tensors:
//   S3xS3  : almost product structure P  (-Id on the f's, +Id on the Jf's)
//   CP3    : J_o = J on D1 = span{f1,Jf1}, -J on D2
//   FlagC3 : J_k = J on D_k = span{fk,Jfk}, -J elsewhere
#pragma once

#include <array>
#include <string>
#include <vector>

#include "nk/rational.hpp"
#include "nk/report.hpp"

namespace nk {

enum class Space { S6, S3xS3, CP3, FlagC3 };

std::string space_name(Space s);

using MVec = std::array<Rat, 6>;
using Mat6 = std::array<std::array<Rat, 6>, 6>;  // column action: (A v)_i = sum_j A[i][j] v[j]

struct Model {
  Space space;
  Mat6 J{};
  std::vector<std::pair<std::string, Mat6>> aux;     // named per-space tensors
  std::array<std::array<MVec, 6>, 6> G{};            // G(e_i, e_j) in basis coords

  MVec apply(const Mat6& m, const MVec& v) const;
  MVec apply_G(const MVec& x, const MVec& y) const;  // bilinear extension
  Rat dot(const MVec& x, const MVec& y) const;
  MVec basis(int i) const;
};

Model build_model(Space space);

// Exhaustive check of the structure identities on basis tuples; every
// residual must vanish exactly.
Report verify_identities(const Model& model);

// Canonical text artifact: nonzero G components and aux matrices.
std::string model_dump(const Model& model);

}  // namespace nk
