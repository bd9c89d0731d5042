// Row-by-row reproduction of the cyclic-sum tables, staged solving, and the
// shape-operator conclusions, plus the constant-curvature analysis of the
// round-sphere case.  Expected row values ship as a versioned data file whose
// checksum is embedded in every report.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nk/curvature.hpp"
#include "nk/frames.hpp"
#include "nk/linform.hpp"
#include "nk/report.hpp"

namespace nk {

struct TableRowSpec {
  std::array<std::string, 4> args;    // frame labels for X, Y, Z, W
  std::vector<std::string> expected;  // one or more linear forms
  std::string erratum;  // corrected form when the printed column has a typo
};

struct SplitSpec {
  std::string target;  // unknown forced to vanish
  std::string atom;    // polynomial split on zero / nonzero
  std::string sym;     // symbol solved by atom = 0
  Rat value;
};

struct TableSpec {
  int id = 0;
  FrameCase fcase = FrameCase::S3xS3Independent;
  std::vector<std::vector<TableRowSpec>> stages;
  std::optional<SplitSpec> split;
  std::string conclusion;   // "umbilical" or "eta-quasi"
  std::string lambda_text;  // stated umbilical factor, norm corrected
};

struct TableData {
  std::vector<TableSpec> tables;
  std::uint64_t checksum = 0;
};

std::string default_data_dir();
TableData load_table_specs(const std::string& path);

struct TableOutcome {
  Report report;
  SolveResult relations;  // final relation set, split applied when scripted
  std::optional<CaseProof> split_proof;
};

// evaluate every row after substituting earlier-stage relations, match each
// against the expected form up to a unit, then solve stage by stage
TableOutcome reproduce_table(const TableSpec& spec, std::uint64_t checksum = 0);

struct ShapeConclusion {
  enum class Kind { TotallyGeodesic, TotallyUmbilical, EtaQuasiUmbilical, Unconstrained };
  Kind kind = Kind::Unconstrained;
  std::string lambda;  // umbilical factor after norm correction
  std::string alpha;   // eta-quasi-umbilical h = alpha g + beta eta (x) eta
  std::string beta;
  Report report;
};

ShapeConclusion conclude_shape(const TableSpec& spec, std::uint64_t checksum = 0);

// Theorem A, round-sphere branch: constant sectional curvature c forces
// lambda_i lambda_j = c - 1 for all pairs of principal curvatures.
struct GaussAnalysis {
  enum class Kind { Umbilical, AtMostOneNonzero, Infeasible };
  Kind kind;
  Rat curvature;          // the constant c
  Rat lambda_squared;     // c - 1 (umbilical case)
  std::string detail;
};

GaussAnalysis s6_gauss_analysis(const Rat& c);

}  // namespace nk
