// Command-line entry point for the verification suites.
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nk/almostcontact.hpp"
#include "nk/curvature.hpp"
#include "nk/frames.hpp"
#include "nk/numeric_s6.hpp"
#include "nk/pointmodel.hpp"
#include "nk/report.hpp"
#include "nk/tables.hpp"

using namespace nk;

namespace {

struct Output {
  std::string format = "text";
  std::string path;
  std::vector<Report> reports;
  std::vector<std::string> raw;  // dump-model output

  int flush() {
    std::ostringstream os;
    if (!raw.empty()) {
      for (const auto& r : raw) os << r;
    } else if (format == "json") {
      os << "[\n";
      for (std::size_t i = 0; i < reports.size(); ++i) {
        std::string j = reports[i].to_json();
        while (!j.empty() && j.back() == '\n') j.pop_back();
        os << j << (i + 1 < reports.size() ? ",\n" : "\n");
      }
      os << "]\n";
    } else if (format == "csv") {
      for (const auto& r : reports) os << r.to_csv();
    } else {
      for (const auto& r : reports) os << r.to_text();
    }
    if (path.empty()) {
      std::cout << os.str();
    } else {
      std::ofstream out(path, std::ios::binary);
      out << os.str();
    }
    for (const auto& r : reports)
      if (!r.passed()) return 1;
    return 0;
  }
};

Space space_by_name(const std::string& s) {
  if (s == "S6" || s == "s6") return Space::S6;
  if (s == "S3xS3" || s == "s3xs3") return Space::S3xS3;
  if (s == "CP3" || s == "cp3") return Space::CP3;
  if (s == "FlagC3" || s == "flagc3" || s == "flag") return Space::FlagC3;
  throw CLI::ValidationError("space must be one of S6, S3xS3, CP3, FlagC3");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "nkverify: exact verification of the curvature tables, shape operator"
      " conclusions and almost contact classifications, with a numeric"
      " round-sphere oracle"};
  app.require_subcommand(1);

  Output out;
  std::string data_dir = default_data_dir();
  app.add_option("--format", out.format, "text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--out", out.path, "write the report to a file");
  app.add_option("--data", data_dir, "directory holding the golden data files");

  auto* identities = app.add_subcommand(
      "verify-identities", "structure identities of the four point models, "
                           "frame validation and numeric frame cross-checks");

  auto* table_cmd =
      app.add_subcommand("reproduce-table", "reproduce tables row by row");
  std::string table_sel = "all";
  table_cmd->add_option("table,--table", table_sel, "1..8 or all");

  auto* thma = app.add_subcommand(
      "verify-theorem-a", "shape conclusions of every table plus the "
                          "constant-curvature analysis on the round sphere");

  auto* thmb = app.add_subcommand("verify-theorem-b",
                                  "replay the almost contact classification");
  std::string case_sel = "all";
  thmb->add_option("case,--case", case_sel, "1..4 or all");

  auto* numeric = app.add_subcommand("numeric-s6", "finite-difference oracle");
  S6Config cfg;
  numeric->add_option("--step", cfg.step, "finite difference step")
      ->check(CLI::Range(1e-6, 1e-3));
  numeric->add_option("--seed", cfg.seed, "random seed");
  numeric->add_option("--tol", cfg.tol_first, "first-order tolerance");
  numeric->add_option("--samples", cfg.samples, "samples per check");

  auto* dump = app.add_subcommand("dump-model", "canonical point-model dump");
  std::string dump_sel;
  dump->add_option("space", dump_sel, "S6, S3xS3, CP3, FlagC3 or all")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage errors exit 2, --help exits 0
  }

  try {
    if (*identities) {
      for (Space sp : {Space::S6, Space::S3xS3, Space::CP3, Space::FlagC3})
        out.reports.push_back(verify_identities(build_model(sp)));
      for (FrameCase c : kAllFrameCases) {
        out.reports.push_back(validate_frame(build_frame(c)));
        out.reports.push_back(cross_check_frame(c));
      }
      out.reports.push_back(verify_kcontact_reduction());
    }
    if (*table_cmd) {
      TableData data = load_table_specs(data_dir + "/tables.txt");
      for (const auto& t : data.tables) {
        if (table_sel != "all" && std::to_string(t.id) != table_sel) continue;
        out.reports.push_back(reproduce_table(t, data.checksum).report);
      }
      if (out.reports.empty())
        throw CLI::ValidationError("no such table: " + table_sel);
    }
    if (*thma) {
      TableData data = load_table_specs(data_dir + "/tables.txt");
      for (const auto& t : data.tables)
        out.reports.push_back(conclude_shape(t, data.checksum).report);
      Report gauss;
      gauss.suite = "theorem-a round-sphere branch";
      for (const auto& [c, want] :
           std::vector<std::pair<Rat, GaussAnalysis::Kind>>{
               {Rat(2), GaussAnalysis::Kind::Umbilical},
               {Rat(3, 2), GaussAnalysis::Kind::Umbilical},
               {Rat(1), GaussAnalysis::Kind::AtMostOneNonzero},
               {Rat(1, 2), GaussAnalysis::Kind::Infeasible},
               {Rat(-1), GaussAnalysis::Kind::Infeasible}}) {
        GaussAnalysis a = s6_gauss_analysis(c);
        auto& item = gauss.add("sectional curvature c = " + c.str(),
                               a.kind == want);
        item.fields["conclusion"] = a.detail;
      }
      out.reports.push_back(gauss);
    }
    if (*thmb) {
      for (int k = 1; k <= 4; ++k) {
        if (case_sel != "all" && std::to_string(k) != case_sel) continue;
        out.reports.push_back(
            verify_theoremB_case(k, data_dir + "/theorem_b.txt"));
      }
      if (out.reports.empty())
        throw CLI::ValidationError("no such case: " + case_sel);
    }
    if (*numeric) out.reports.push_back(numeric_s6_suite(cfg));
    if (*dump) {
      if (dump_sel == "all") {
        for (Space sp : {Space::S6, Space::S3xS3, Space::CP3, Space::FlagC3})
          out.raw.push_back(model_dump(build_model(sp)));
      } else {
        out.raw.push_back(model_dump(build_model(space_by_name(dump_sel))));
      }
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return out.flush();
}
