// The seven hypersurface frame configurations of the lemma analysis, encoded
// intrinsically: diagonal Gram matrix, J action and auxiliary tensor actions
// as matrices in frame coordinates (basis E1..E5 tangent, E6 = N).  Symbolic
// angles live only here; the explicit point model is used as an independent
// numeric cross-check.
#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nk/pointmodel.hpp"
#include "nk/report.hpp"
#include "nk/scalar.hpp"

namespace nk {

enum class FrameCase {
  S3xS3Independent,  // PN independent from N, JN
  S3xS3Dependent,    // PN = cos(th) N + sin(th) JN
  CP3D1,             // N in the rank-2 distribution
  CP3D2,             // N in the rank-4 distribution
  CP3Mixed,          // N = V1 + V2 with nonzero parts in both
  FlagD1,            // N in one distribution
  FlagD1D2,          // N in two distributions
  FlagD1D2D3,        // N in all three distributions
};

constexpr std::array<FrameCase, 8> kAllFrameCases = {
    FrameCase::S3xS3Independent, FrameCase::S3xS3Dependent, FrameCase::CP3D1,
    FrameCase::CP3D2,            FrameCase::CP3Mixed,       FrameCase::FlagD1,
    FrameCase::FlagD1D2,         FrameCase::FlagD1D2D3};

std::string frame_case_name(FrameCase c);

using SMat = std::array<std::array<Scalar, 6>, 6>;  // column action

struct Frame {
  FrameCase fcase;
  Space space;
  std::array<std::string, 6> labels;  // paper names of E1..E5 and N
  RingPtr ring;
  std::array<Scalar, 6> norms;  // |E_i|^2; the Gram matrix is diagonal
  SMat J;
  std::vector<std::pair<std::string, SMat>> aux;
  std::vector<std::string> assumptions;  // nonvanishing atoms with their origin

  int label_index(const std::string& label) const;  // -1 if absent
  std::array<Scalar, 6> apply(const SMat& m, const std::array<Scalar, 6>& v) const;
  Scalar inner(const std::array<Scalar, 6>& x, const std::array<Scalar, 6>& y) const;
  std::array<Scalar, 6> basis(int i) const;
};

Frame build_frame(FrameCase c);

// Exact checks of the frame data: Gram diagonality conventions, J and aux
// orthogonality, J^2 = -Id, aux structure relations.
Report validate_frame(const Frame& f);

std::string frame_dump(const Frame& f);

// Instantiate the lemma's frame numerically inside the explicit point model
// and compare Gram matrix, J action and aux actions entry by entry against
// the symbolic frame evaluated at the sampled angles.  params override the
// default generic instantiation; values violating the lemma's genericity
// hypotheses are rejected with std::invalid_argument.
Report cross_check_frame(FrameCase c, double tol = 1e-10,
                         const std::map<std::string, double>& params = {});

// the numeric instantiation itself: frame vectors in model coordinates and
// the sampled value of every ring symbol
struct FrameInstance {
  std::array<std::array<double, 6>, 6> vectors;  // E1..E5, N
  std::vector<double> sym_values;
};
FrameInstance instantiate_frame(FrameCase c,
                                const std::map<std::string, double>& params = {});

}  // namespace nk
