// Acceptance suite: one pass/fail line per criterion, exit 1 on any failure.
#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>

#include "nk/almostcontact.hpp"
#include "nk/curvature.hpp"
#include "nk/frames.hpp"
#include "nk/numeric_s6.hpp"
#include "nk/pointmodel.hpp"
#include "nk/tables.hpp"

using namespace nk;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void line(int n, bool ok, const std::string& what, const std::string& note = "") {
  if (!ok) ++failures;
  std::printf("criterion %d: %s  %s%s%s\n", n, ok ? "PASS" : "FAIL",
              what.c_str(), note.empty() ? "" : "  -- ", note.c_str());
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

}  // namespace

int main() {
  TableData data = load_table_specs(default_data_dir() + "/tables.txt");
  std::string theorem_b = default_data_dir() + "/theorem_b.txt";

  // 1. structure identities, exact on all basis tuples of every model
  {
    auto t0 = Clock::now();
    bool ok = true;
    for (Space sp : {Space::S6, Space::S3xS3, Space::CP3, Space::FlagC3})
      ok = ok && verify_identities(build_model(sp)).passed();
    double dt = seconds_since(t0);
    line(1, ok && dt < 5.0,
         "structure identities exact on every basis tuple of all four models",
         "runtime " + std::to_string(dt) + " s");
  }

  // 2. every table row matches the printed column up to a unit
  {
    auto t0 = Clock::now();
    int matched = 0, total = 0, erratum = 0;
    for (const auto& t : data.tables) {
      TableOutcome out = reproduce_table(t, data.checksum);
      for (const auto& item : out.report.items) {
        if (item.id.rfind("row ", 0) != 0 ||
            item.id.find(" consequence ") != std::string::npos)
          continue;
        ++total;
        if (item.pass)
          ++matched;
        else if (item.fields.count("erratum_kappa"))
          ++erratum;
      }
    }
    double dt = seconds_since(t0);
    std::ostringstream note;
    note << matched << "/" << total << " printed rows";
    if (erratum)
      note << "; " << erratum
           << " further row(s) match only the documented erratum form "
              "(see data/tables.txt and the report fields)";
    note << "; runtime " << dt << " s";
    line(2, matched == 108 && dt < 30.0,
         "all 108 table rows match the printed right-hand columns up to "
         "recorded unit factors",
         note.str());
  }

  // 3. shape conclusions with norm corrections
  {
    bool ok = true;
    auto kind_of = [&](int idx) { return conclude_shape(data.tables[idx], data.checksum); };
    ShapeConclusion t1 = kind_of(0);
    ok = ok && t1.kind == ShapeConclusion::Kind::TotallyUmbilical &&
         t1.lambda == "h11";
    ShapeConclusion t5 = kind_of(4);
    ok = ok && t5.kind == ShapeConclusion::Kind::TotallyUmbilical &&
         t5.lambda == "1/c^2*h11";
    ShapeConclusion t8 = kind_of(7);
    ok = ok && t8.kind == ShapeConclusion::Kind::TotallyUmbilical &&
         t8.lambda == "h11";
    for (int idx : {1, 2, 3, 5, 6}) {
      ShapeConclusion c = kind_of(idx);
      ok = ok && c.kind == ShapeConclusion::Kind::EtaQuasiUmbilical &&
           c.alpha == "h22" && c.beta == "h11 - h22";
    }
    line(3, ok,
         "tables 1/5 totally umbilical with the stated norm corrections, "
         "table 8 all-diagonal-equal, tables 2,3,4,6,7 eta-quasi-umbilical");
  }

  // 4. the case-split certificate for h34
  {
    TableOutcome out = reproduce_table(data.tables[0], data.checksum);
    bool ok = out.split_proof && out.split_proof->closed &&
              out.split_proof->branches.size() == 2 &&
              replay(*out.split_proof,
                     build_frame(FrameCase::S3xS3Independent).ring);
    line(4, ok, "two-branch certificate closes the h34 argument and replays");
  }

  // 5. round-sphere constant-curvature analysis
  {
    auto t0 = Clock::now();
    bool ok = s6_gauss_analysis(Rat(2)).kind == GaussAnalysis::Kind::Umbilical &&
              s6_gauss_analysis(Rat(2)).lambda_squared == Rat(1) &&
              s6_gauss_analysis(Rat(1)).kind ==
                  GaussAnalysis::Kind::AtMostOneNonzero &&
              s6_gauss_analysis(Rat(1, 2)).kind ==
                  GaussAnalysis::Kind::Infeasible;
    // brute-force sign enumeration as the oracle
    for (int pattern = 0; pattern < 243; ++pattern) {
      int m = pattern, sign[5];
      for (int i = 0; i < 5; ++i) {
        sign[i] = m % 3 - 1;
        m /= 3;
      }
      bool feas_neg = true;
      int nonzero = 0;
      for (int i = 0; i < 5; ++i) nonzero += sign[i] != 0;
      for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
          if (sign[i] * sign[j] != -1) feas_neg = false;
      ok = ok && !feas_neg;  // c < 1 admits no sign pattern at all
      (void)nonzero;
    }
    double dt = seconds_since(t0);
    line(5, ok && dt < 1.0,
         "curvature >= 1 on the sphere: umbilical above 1, at most one "
         "nonzero curvature at 1, infeasible below 1",
         "runtime " + std::to_string(dt) + " s");
  }

  // 6. the four-case classification replay
  {
    bool ok = true;
    for (int k = 1; k <= 4; ++k) {
      Report rep = verify_theoremB_case(k, theorem_b);
      ok = ok && rep.passed();
      if (k >= 3) {
        int families = 0;
        for (const auto& item : rep.items)
          if (item.id.find("final family") != std::string::npos && item.pass)
            ++families;
        ok = ok && families == 4;
      }
    }
    line(6, ok,
         "all scripted steps of the four cases match and the final families "
         "agree with the statement (four families each in cases 3 and 4)");
  }

  // 7. k-contact reduction
  line(7, verify_kcontact_reduction().passed(),
       "Killing Reeb field forces h(i,j) = 0 for i != j, h11 = h22, h33 = h44",
       "frame order zeta, phi1 zeta, phi2 zeta, phi3 zeta, xi");

  // 8. numeric oracle at the stated tolerances
  {
    auto t0 = Clock::now();
    S6Config cfg;
    Report rep = numeric_s6_suite(cfg);
    double dt = seconds_since(t0);
    line(8, rep.passed() && dt < 10.0,
         "finite-difference residuals below 1e-5 (1e-4 for second "
         "differences), umbilical spread below 1e-6, O(step^2) confirmed",
         "runtime " + std::to_string(dt) + " s");
  }

  // 9. byte-identical reports across runs
  {
    auto run_all = [&]() {
      std::string acc;
      for (const auto& t : data.tables)
        acc += reproduce_table(t, data.checksum).report.to_json();
      for (int k = 1; k <= 4; ++k)
        acc += verify_theoremB_case(k, theorem_b).to_json();
      acc += numeric_s6_suite({}).to_json();
      return acc;
    };
    line(9, run_all() == run_all(),
         "two full runs with the same configuration produce byte-identical "
         "JSON reports");
  }

  if (failures) {
    std::printf("ACCEPTANCE: %d criterion(s) failing\n", failures);
    return 1;
  }
  std::printf("ACCEPTANCE: all criteria pass\n");
  return 0;
}
