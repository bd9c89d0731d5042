#include "nk/tables.hpp"

#include <sstream>
#include <stdexcept>

namespace nk {

std::string default_data_dir() {
#ifdef NK_DATA_DIR
  return NK_DATA_DIR;
#else
  return "data";
#endif
}

namespace {

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string t;
  while (is >> t) out.push_back(t);
  return out;
}

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

Rat parse_rat(const std::string& s) {
  std::size_t slash = s.find('/');
  if (slash == std::string::npos) return Rat(std::stoll(s));
  return Rat(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

FrameCase frame_case_by_name(const std::string& name) {
  for (FrameCase c : kAllFrameCases)
    if (frame_case_name(c) == name) return c;
  throw std::runtime_error("tables: unknown frame case " + name);
}

}  // namespace

TableData load_table_specs(const std::string& path) {
  std::string content = read_file(path);
  TableData data;
  data.checksum = fnv1a(content);

  std::istringstream in(content);
  std::string line;
  TableSpec* cur = nullptr;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    auto tokens = split_ws(line);
    const std::string& cmd = tokens[0];
    if (cmd == "table") {
      TableSpec t;
      t.id = std::stoi(tokens[1]);
      if (tokens.size() < 4 || tokens[2] != "frame")
        throw std::runtime_error("tables: malformed table header: " + line);
      t.fcase = frame_case_by_name(tokens[3]);
      data.tables.push_back(std::move(t));
      cur = &data.tables.back();
      continue;
    }
    if (!cur) throw std::runtime_error("tables: directive before any table");
    if (cmd == "stage") {
      cur->stages.emplace_back();
    } else if (cmd == "row") {
      std::size_t sep = line.find("::");
      if (sep == std::string::npos)
        throw std::runtime_error("tables: row without expected form: " + line);
      auto head = split_ws(line.substr(0, sep));
      if (head.size() != 5)
        throw std::runtime_error("tables: row needs four arguments: " + line);
      TableRowSpec row;
      for (int i = 0; i < 4; ++i)
        row.args[static_cast<std::size_t>(i)] = head[static_cast<std::size_t>(i) + 1];
      std::string rest = line.substr(sep + 2);
      std::size_t err = rest.find("erratum");
      if (err != std::string::npos) {
        row.erratum = trim(rest.substr(err + 7));
        rest = rest.substr(0, err);
      }
      std::size_t pos = 0;
      while (pos != std::string::npos) {
        std::size_t comma = rest.find(',', pos);
        std::string piece = comma == std::string::npos
                                ? rest.substr(pos)
                                : rest.substr(pos, comma - pos);
        row.expected.push_back(trim(piece));
        pos = comma == std::string::npos ? std::string::npos : comma + 1;
      }
      if (cur->stages.empty())
        throw std::runtime_error("tables: row before first stage");
      cur->stages.back().push_back(std::move(row));
    } else if (cmd == "split") {
      // split target h34 atom <poly...> at <sym> = <rat>
      SplitSpec sp;
      std::size_t i = 1;
      if (tokens[i] != "target") throw std::runtime_error("tables: bad split");
      sp.target = tokens[++i];
      if (tokens[++i] != "atom") throw std::runtime_error("tables: bad split");
      std::string atom;
      for (++i; i < tokens.size() && tokens[i] != "at"; ++i) {
        if (!atom.empty()) atom += " ";
        atom += tokens[i];
      }
      sp.atom = atom;
      sp.sym = tokens[++i];
      if (tokens[++i] != "=") throw std::runtime_error("tables: bad split");
      sp.value = parse_rat(tokens[++i]);
      cur->split = sp;
    } else if (cmd == "conclude") {
      cur->conclusion = tokens[1];
      if (tokens.size() > 3 && tokens[2] == "lambda") {
        std::string l;
        for (std::size_t i = 3; i < tokens.size(); ++i) l += tokens[i];
        cur->lambda_text = l;
      }
    } else {
      throw std::runtime_error("tables: unknown directive " + cmd);
    }
  }
  return data;
}

namespace {

TableOutcome reproduce_on(const Frame& f, const TableSpec& spec,
                          std::uint64_t checksum) {
  TableOutcome out;
  out.report.suite = "table " + std::to_string(spec.id) + " (" +
                     frame_case_name(spec.fcase) + ")";
  out.report.checksum = checksum;

  ShapeOp S = ShapeOp::symbolic(f);
  Eliminator el(f.ring);

  // Rows are evaluated in reading order: each may use every relation already
  // derived (the dotted lines mark where that use becomes necessary).
  int row_no = 0;
  for (std::size_t stage = 0; stage < spec.stages.size(); ++stage) {
    for (const auto& row : spec.stages[stage]) {
      ++row_no;
      std::string id = "row " + std::to_string(row_no) + " (" + row.args[0] +
                       ", " + row.args[1] + ", " + row.args[2] + ", " +
                       row.args[3] + ")";
      std::array<FrameVec, 4> v;
      for (int k = 0; k < 4; ++k) {
        int idx = f.label_index(row.args[static_cast<std::size_t>(k)]);
        if (idx < 0)
          throw std::runtime_error("tables: unknown frame label " +
                                   row.args[static_cast<std::size_t>(k)]);
        v[static_cast<std::size_t>(k)] = f.basis(idx);
      }
      LinForm raw = cyclic_sum(f, S, v[0], v[1], v[2], v[3]);
      LinForm reduced = el.result().reduce(raw);

      // match one stated conjunct, both sides reduced by known relations
      bool matched = false;
      Scalar kappa;
      std::string matched_text;
      std::string diff;
      for (const auto& text : row.expected) {
        LinForm want = el.result().reduce(parse_linform(f.ring, text));
        MatchResult m = match_up_to_unit(reduced, want);
        if (m.matched) {
          matched = true;
          kappa = m.kappa;
          matched_text = text;
          break;
        }
        diff = m.diff;
      }
      auto& item = out.report.add(id, matched);
      item.fields["computed"] = reduced.str();
      item.fields["expected"] = row.expected[0];
      item.fields["stage"] = std::to_string(stage + 1);
      if (matched) {
        item.fields["kappa"] = kappa.str();
        if (matched_text != row.expected[0]) item.fields["matched"] = matched_text;
      } else {
        item.fields["residual"] = diff;
        if (!row.erratum.empty()) {
          LinForm want = el.result().reduce(parse_linform(f.ring, row.erratum));
          MatchResult m = match_up_to_unit(reduced, want);
          if (m.matched) {
            item.fields["erratum"] = row.erratum;
            item.fields["erratum_kappa"] = m.kappa.str();
            item.fields["note"] =
                "computation disagrees with the printed column but matches "
                "the erratum form";
          }
        }
      }
      el.add(reduced);
      // a multi-form row pins every listed component once it is solved in
      if (row.expected.size() > 1) {
        for (const auto& text : row.expected) {
          LinForm residual = el.result().reduce(parse_linform(f.ring, text));
          out.report.add(id + " consequence " + text + " = 0",
                         residual.is_zero());
        }
      }
    }
  }

  if (spec.split) {
    auto target = Unknown::from_name(spec.split->target);
    if (!target) throw std::runtime_error("tables: bad split target");
    EqSystem residual_sys = EqSystem::single_stage(f.ring, el.result().deferred);
    CaseSplit cs{f.ring->parse(spec.split->atom), f.ring->find(spec.split->sym),
                 spec.split->value};
    CaseProof proof = prove_by_cases(residual_sys, *target, cs);
    auto& item = out.report.add("case split on " + spec.split->atom +
                                    " forces " + spec.split->target + " = 0",
                                proof.closed);
    item.fields["branches"] = std::to_string(proof.branches.size());
    if (proof.closed) {
      el.result().deferred.clear();
      el.add(LinForm::unknown(*target));
      out.report.add("case split certificate replays", replay(proof, f.ring));
    }
    out.split_proof = std::move(proof);
  }

  out.report.add("no unresolved equations", el.result().deferred.empty());
  out.report.add("no contradiction", !el.result().contradiction);
  {
    auto& item = out.report.add("solved relations", true);
    std::ostringstream os;
    for (const auto& [u, formula] : el.result().solved)
      os << u.name() << " -> " << formula.str() << "; ";
    item.fields["relations"] = os.str();
  }
  out.relations = el.result();
  return out;
}

}  // namespace

TableOutcome reproduce_table(const TableSpec& spec, std::uint64_t checksum) {
  Frame f = build_frame(spec.fcase);
  return reproduce_on(f, spec, checksum);
}

ShapeConclusion conclude_shape(const TableSpec& spec, std::uint64_t checksum) {
  ShapeConclusion con;
  Frame f = build_frame(spec.fcase);
  TableOutcome outcome = reproduce_on(f, spec, checksum);
  con.report = std::move(outcome.report);
  con.report.suite = "shape " + std::to_string(spec.id) + " (" +
                     frame_case_name(spec.fcase) + ")";
  const SolveResult& rel = outcome.relations;

  bool offdiag_zero = true;
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j)
      offdiag_zero =
          offdiag_zero && rel.reduce(LinForm::unknown(Unknown::h(i, j))).is_zero();
  con.report.add("off-diagonal components vanish", offdiag_zero);

  // principal curvatures after norm correction: lambda_i = h(i,i) / |E_i|^2
  std::array<LinForm, 5> lam;
  for (int i = 1; i <= 5; ++i)
    lam[static_cast<std::size_t>(i - 1)] =
        f.norms[static_cast<std::size_t>(i - 1)].inverse() *
        rel.reduce(LinForm::unknown(Unknown::h(i, i)));

  bool tail_equal = true;  // lambda_2 = ... = lambda_5
  for (int i = 2; i <= 4; ++i)
    tail_equal = tail_equal && lam[static_cast<std::size_t>(i)] == lam[1];
  bool all_equal = tail_equal && lam[0] == lam[1];

  if (!offdiag_zero || !tail_equal) {
    con.kind = ShapeConclusion::Kind::Unconstrained;
    con.report.add("classification", false);
    return con;
  }
  if (all_equal) {
    bool zero = lam[0].is_zero();
    con.kind = zero ? ShapeConclusion::Kind::TotallyGeodesic
                    : ShapeConclusion::Kind::TotallyUmbilical;
    con.lambda = lam[0].str();
    bool expected_kind = spec.conclusion == "umbilical";
    con.report.add("totally umbilical with S = (" + con.lambda + ") Id",
                   expected_kind);
    if (!spec.lambda_text.empty()) {
      LinForm want = parse_linform(f.ring, spec.lambda_text);
      con.report.add("umbilical factor equals " + spec.lambda_text,
                     lam[0] == want);
    }
  } else {
    con.kind = ShapeConclusion::Kind::EtaQuasiUmbilical;
    con.alpha = lam[1].str();
    con.beta = (lam[0] - lam[1]).str();
    bool expected_kind = spec.conclusion == "eta-quasi";
    con.report.add("eta-quasi-umbilical: S = (" + con.alpha + ") Id + (" +
                       con.beta + ") eta (x) xi",
                   expected_kind);
    // the free diagonal entry is the JN direction, and h22..h55 collapse to h22
    LinForm h22 = LinForm::unknown(Unknown::h(2, 2));
    con.report.add("h22 = h33 = h44 = h55 with h11 unconstrained",
                   lam[1] == h22 && rel.solved.find(Unknown::h(1, 1)) ==
                                        rel.solved.end());
  }
  return con;
}

GaussAnalysis s6_gauss_analysis(const Rat& c) {
  GaussAnalysis a{GaussAnalysis::Kind::Umbilical, c, c - Rat(1), ""};
  Rat k = c - Rat(1);
  if (k.is_zero()) {
    a.kind = GaussAnalysis::Kind::AtMostOneNonzero;
    a.detail =
        "lambda_i lambda_j = 0 for all pairs: at most one nonzero principal "
        "curvature";
    return a;
  }
  if (k.is_negative()) {
    a.kind = GaussAnalysis::Kind::Infeasible;
    a.detail =
        "lambda_i lambda_j < 0 for all pairs is impossible among five reals";
    return a;
  }
  a.kind = GaussAnalysis::Kind::Umbilical;
  a.detail =
      "all principal curvatures equal +/- sqrt(c-1): totally umbilical";
  return a;
}

}  // namespace nk
