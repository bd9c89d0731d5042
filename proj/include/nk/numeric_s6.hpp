// Floating-point model of the round six-sphere inside the imaginary
// octonions: the one ambient space with a fully explicit embedding.  Serves
// as an independent finite-difference oracle for G = nabla J, the algebraic
// identities, the covariant derivative formulas, and the umbilical family of
// hypersurfaces at height t.
#pragma once

#include <cstdint>

#include "nk/octonion.hpp"
#include "nk/report.hpp"

namespace nk {

struct S6Config {
  double step = 1e-4;
  int samples = 64;
  std::uint32_t seed = 1;
  double tol_first = 1e-5;   // first-order finite differences
  double tol_second = 1e-4;  // nested differences
  double tol_shape = 1e-6;   // umbilical family
};

// central finite difference of (nabla_X J) Y at p, projected tangentially;
// X and Y tangent at the unit imaginary octonion p
Oct fd_G(const Oct& p, const Oct& X, const Oct& Y, double step);

// finite-difference Weingarten map of the height-t hypersurface at a point
struct ShapeEstimate {
  double mean;    // average eigenvalue
  double spread;  // max |lambda_i - lambda_j|
};
ShapeEstimate geodesic_sphere_shape(double t, std::uint32_t seed, double step);

// finite-difference (nabla_X phi_i) Y on the height-t hypersurface compared
// against the stated closed form evaluated with the measured shape operator;
// returns the worst residual over the sampled point
double fd_covariant_phi_residual(int i, double t, std::uint32_t seed,
                                 double step);

// the full battery: composition algebra, J isometry, G skewness, the norm
// identity, the derivative identity by second differences, the covariant
// derivative formulas, the umbilical family, and O(step^2) convergence
Report numeric_s6_suite(const S6Config& cfg = {});

}  // namespace nk
