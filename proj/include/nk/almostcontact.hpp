// The induced almost contact structures phi_1 = J - eta (x) N, phi_2 =
// xi _| G, phi_3 = N _| G on a hypersurface, their covariant derivative
// formulas with a symbolic shape operator, the defining equations of the
// four structure classes, and a scripted verifier that replays the
// classification proof case by case.
#pragma once

#include <array>
#include <string>

#include "nk/linform.hpp"
#include "nk/pointmodel.hpp"
#include "nk/report.hpp"

namespace nk {

enum class ACKind { Sasakian, CoKahler, NearlySasakian, NearlyCosymplectic };

ACKind ac_kind_by_name(const std::string& name);

// frame {zeta, phi1 zeta, phi2 zeta, phi3 zeta, xi} with xi = -JN, realized
// exactly in the point model (N = f1, zeta = f2)
struct ACFrame {
  Model model;
  std::array<MVec, 6> vectors;                   // frame elements and N
  std::array<std::array<std::array<Rat, 5>, 5>, 3> phi;  // phi_i columns
  std::array<std::array<MVec, 6>, 6> G;          // G on frame pairs, frame coords

  Rat eta(int x) const { return Rat(x == 4 ? 1 : 0); }
  Rat omega(int i, int x, int y) const;  // g(phi_i E_x, E_y)
};

ACFrame build_ac_frame();

// (nabla_X phi_i) Y with the shape operator left symbolic; six components
// over {frame, N}, each affine-linear in the h unknowns
std::array<LinForm, 6> covariant_phi(const ACFrame& ac, const RingPtr& ring,
                                     int i, int X, int Y);

// g(defining equation of the class, Z) for phi = a phi_1 + b phi_2 + c phi_3;
// the coefficients are passed as Scalars so proof branches can reparametrize
// them, and the derivatives X(a), X(b), X(c) enter as formal unknowns
LinForm defining_equation(const ACFrame& ac, const RingPtr& ring, ACKind kind,
                          const std::array<Scalar, 3>& abc, int X, int Y, int Z);

// Killing Reeb field: the symmetric part of nabla xi = phi_1 S + phi_3
// vanishes; with zeta an eigenvector of S this pins the shape operator to
// diag(h11, h11, h33, h33, h55)
Report verify_kcontact_reduction();
std::vector<LinForm> kcontact_equations(const ACFrame& ac, const RingPtr& ring);

// replay one case of the classification proof from the script file
Report verify_theoremB_case(int case_id, const std::string& script_path);

}  // namespace nk
