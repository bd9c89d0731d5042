// The closed-form curvature tensors of the four ambient spaces evaluated in
// frame coordinates, the symbolic shape operator, and the cyclic-sum linear
// form that drives the table computations.
#pragma once

#include <array>

#include "nk/frames.hpp"
#include "nk/linform.hpp"

namespace nk {

using FrameVec = std::array<Scalar, 6>;  // components over E1..E5, N

// S E_i = sum_j cols[j][i] E_j; entries are linear in the h unknowns
struct ShapeOp {
  std::array<std::array<LinForm, 6>, 6> cols;

  // g(S E_i, E_j) = h(i,j) over the frame's diagonal Gram matrix
  static ShapeOp symbolic(const Frame& f);
  static ShapeOp identity(const Frame& f);
  std::array<LinForm, 6> apply(const Frame& f, const FrameVec& v) const;
};

// curvature of the frame's ambient space applied to (X, Y) Z, exactly
FrameVec riemann(const Frame& f, const FrameVec& X, const FrameVec& Y,
                 const FrameVec& Z);

// cyclic sum over (X, Y, W) of g(R(X,Y)Z, SW); arguments must be tangent
LinForm cyclic_sum(const Frame& f, const ShapeOp& S, const FrameVec& X,
                   const FrameVec& Y, const FrameVec& Z, const FrameVec& W);

// sectional curvature 1 + lambda_i lambda_j of a hypersurface plane in the
// round sphere, S diagonal
Scalar gauss_sectional(const std::array<Scalar, 5>& lambda, int i, int j);

// orthonormal adapted frame on a hypersurface of the round sphere (no aux
// tensors; the constant-curvature formula only uses the metric)
Frame build_s6_frame();

}  // namespace nk
