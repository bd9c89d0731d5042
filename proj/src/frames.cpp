#include "nk/frames.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace nk {

std::string frame_case_name(FrameCase c) {
  switch (c) {
    case FrameCase::S3xS3Independent: return "s3xs3-independent";
    case FrameCase::S3xS3Dependent: return "s3xs3-dependent";
    case FrameCase::CP3D1: return "cp3-d1";
    case FrameCase::CP3D2: return "cp3-d2";
    case FrameCase::CP3Mixed: return "cp3-mixed";
    case FrameCase::FlagD1: return "flag-d1";
    case FrameCase::FlagD1D2: return "flag-d1d2";
    case FrameCase::FlagD1D2D3: return "flag-d1d2d3";
  }
  return "?";
}

int Frame::label_index(const std::string& label) const {
  for (int i = 0; i < 6; ++i)
    if (labels[static_cast<std::size_t>(i)] == label) return i;
  return -1;
}

std::array<Scalar, 6> Frame::apply(const SMat& m,
                                   const std::array<Scalar, 6>& v) const {
  std::array<Scalar, 6> r;
  for (std::size_t i = 0; i < 6; ++i) {
    Scalar acc = ring->constant(Rat(0));
    for (std::size_t j = 0; j < 6; ++j) acc = acc + m[i][j] * v[j];
    r[i] = acc;
  }
  return r;
}

Scalar Frame::inner(const std::array<Scalar, 6>& x,
                    const std::array<Scalar, 6>& y) const {
  Scalar acc = ring->constant(Rat(0));
  for (std::size_t i = 0; i < 6; ++i) acc = acc + x[i] * y[i] * norms[i];
  return acc;
}

std::array<Scalar, 6> Frame::basis(int i) const {
  std::array<Scalar, 6> v;
  for (int k = 0; k < 6; ++k)
    v[static_cast<std::size_t>(k)] = ring->constant(Rat(k == i ? 1 : 0));
  return v;
}

namespace {

// column-major entry table: c[j] lists the components of the image of E_{j+1}
SMat cols(const RingPtr& ring, const std::array<std::array<const char*, 6>, 6>& c) {
  SMat m;
  for (std::size_t j = 0; j < 6; ++j)
    for (std::size_t i = 0; i < 6; ++i) m[i][j] = ring->parse(c[j][i]);
  return m;
}

std::array<Scalar, 6> norms_of(const RingPtr& ring,
                               const std::array<const char*, 6>& t) {
  std::array<Scalar, 6> n;
  for (std::size_t i = 0; i < 6; ++i) n[i] = ring->parse(t[i]);
  return n;
}

}  // namespace

Frame build_frame(FrameCase c) {
  Frame f;
  f.fcase = c;
  switch (c) {
    case FrameCase::S3xS3Independent: {
      // V = PN - th1 N - th2 JN, frame {JN, V, JV, G(V,N), JG(V,N)};
      // rho = 1 - th1^2 - th2^2 = |V|^2 is a unit by the independence hypothesis
      f.space = Space::S3xS3;
      RingBuilder rb;
      SymId th1 = rb.add_atom("th1");
      SymId th2 = rb.add_atom("th2");
      SymId rho = rb.add_atom("rho", true);
      rb.add_relation({{th1, 2}, {th2, 2}, {rho, 1}}, Rat(1), th2);
      f.ring = rb.freeze();
      f.labels = {"JN", "V", "JV", "G(V,N)", "JG(V,N)", "N"};
      f.norms = norms_of(f.ring, {"1", "rho", "rho", "rho", "rho", "1"});
      f.J = cols(f.ring, {{{"0", "0", "0", "0", "0", "-1"},
                           {"0", "0", "1", "0", "0", "0"},
                           {"0", "-1", "0", "0", "0", "0"},
                           {"0", "0", "0", "0", "1", "0"},
                           {"0", "0", "0", "-1", "0", "0"},
                           {"1", "0", "0", "0", "0", "0"}}});
      // the almost product structure in frame coordinates (the stated matrix)
      f.aux.emplace_back(
          "P", cols(f.ring, {{{"-th1", "0", "-1", "0", "0", "th2"},
                              {"0", "-th1", "th2", "0", "0", "rho"},
                              {"-rho", "th2", "th1", "0", "0", "0"},
                              {"0", "0", "0", "1", "0", "0"},
                              {"0", "0", "0", "0", "-1", "0"},
                              {"th2", "1", "0", "0", "0", "th1"}}}));
      f.assumptions = {"rho"};
      break;
    }
    case FrameCase::S3xS3Dependent: {
      // PN = cos(th) N + sin(th) JN; V1, V2 eigenvectors of P inside D2.
      // The table rows pin down the convention actually used there: V1 and
      // V2 both span the (+1)-eigenspace, JV1 and JV2 the (-1)-eigenspace.
      f.space = Space::S3xS3;
      RingBuilder rb;
      rb.add_pair("c", "s");
      f.ring = rb.freeze();
      f.labels = {"JN", "V1", "V2", "JV1", "JV2", "N"};
      f.norms = norms_of(f.ring, {"1", "1", "1", "1", "1", "1"});
      f.J = cols(f.ring, {{{"0", "0", "0", "0", "0", "-1"},
                           {"0", "0", "0", "1", "0", "0"},
                           {"0", "0", "0", "0", "1", "0"},
                           {"0", "-1", "0", "0", "0", "0"},
                           {"0", "0", "-1", "0", "0", "0"},
                           {"1", "0", "0", "0", "0", "0"}}});
      f.aux.emplace_back("P", cols(f.ring, {{{"-c", "0", "0", "0", "0", "s"},
                                             {"0", "1", "0", "0", "0", "0"},
                                             {"0", "0", "1", "0", "0", "0"},
                                             {"0", "0", "0", "-1", "0", "0"},
                                             {"0", "0", "0", "0", "-1", "0"},
                                             {"s", "0", "0", "0", "0", "c"}}}));
      break;
    }
    case FrameCase::CP3D1:
    case FrameCase::CP3D2: {
      // orthonormal frame {JN, V, JV, G(V,N), JG(V,N)}; J_o equals J on the
      // distribution containing N and -J on the other one (and vice versa)
      f.space = Space::CP3;
      f.ring = RingBuilder{}.freeze();
      f.labels = {"JN", "V", "JV", "G(V,N)", "JG(V,N)", "N"};
      f.norms = norms_of(f.ring, {"1", "1", "1", "1", "1", "1"});
      f.J = cols(f.ring, {{{"0", "0", "0", "0", "0", "-1"},
                           {"0", "0", "1", "0", "0", "0"},
                           {"0", "-1", "0", "0", "0", "0"},
                           {"0", "0", "0", "0", "1", "0"},
                           {"0", "0", "0", "-1", "0", "0"},
                           {"1", "0", "0", "0", "0", "0"}}});
      if (c == FrameCase::CP3D1) {
        f.aux.emplace_back("Jo",
                           cols(f.ring, {{{"0", "0", "0", "0", "0", "-1"},
                                          {"0", "0", "-1", "0", "0", "0"},
                                          {"0", "1", "0", "0", "0", "0"},
                                          {"0", "0", "0", "0", "-1", "0"},
                                          {"0", "0", "0", "1", "0", "0"},
                                          {"1", "0", "0", "0", "0", "0"}}}));
      } else {
        f.aux.emplace_back("Jo",
                           cols(f.ring, {{{"0", "0", "0", "0", "0", "1"},
                                          {"0", "0", "1", "0", "0", "0"},
                                          {"0", "-1", "0", "0", "0", "0"},
                                          {"0", "0", "0", "0", "-1", "0"},
                                          {"0", "0", "0", "1", "0", "0"},
                                          {"-1", "0", "0", "0", "0", "0"}}}));
      }
      break;
    }
    case FrameCase::CP3Mixed: {
      // N = V1 + V2 with |V1|^2 = cos^2 th, |V2|^2 = sin^2 th;
      // V3 = G(G(V1,V2),N) = cos^2(th) N - V1 completes the orthogonal frame
      f.space = Space::CP3;
      RingBuilder rb;
      rb.add_pair("c", "s", true, true);
      f.ring = rb.freeze();
      f.labels = {"JV1", "JV2", "V3", "G(V1,V2)", "JG(V1,V2)", "N"};
      f.norms = norms_of(f.ring,
                         {"c^2", "s^2", "c^2*s^2", "c^2*s^2", "c^2*s^2", "1"});
      // V1 = c^2 N - V3 and V2 = s^2 N + V3 resolve J and J_o on the frame
      f.J = cols(f.ring, {{{"0", "0", "1", "0", "0", "-c^2"},
                           {"0", "0", "-1", "0", "0", "-s^2"},
                           {"-s^2", "c^2", "0", "0", "0", "0"},
                           {"0", "0", "0", "0", "1", "0"},
                           {"0", "0", "0", "-1", "0", "0"},
                           {"1", "1", "0", "0", "0", "0"}}});
      f.aux.emplace_back("Jo",
                         cols(f.ring, {{{"0", "0", "1", "0", "0", "-c^2"},
                                        {"0", "0", "1", "0", "0", "s^2"},
                                        {"-s^2", "-c^2", "0", "0", "0", "0"},
                                        {"0", "0", "0", "0", "-1", "0"},
                                        {"0", "0", "0", "1", "0", "0"},
                                        {"1", "-1", "0", "0", "0", "0"}}}));
      f.assumptions = {"c", "s"};
      break;
    }
    case FrameCase::FlagD1: {
      // orthonormal {JN, U, JU, V, JV}, U and V unit fields in the two
      // distributions not containing N
      f.space = Space::FlagC3;
      f.ring = RingBuilder{}.freeze();
      f.labels = {"JN", "U", "JU", "V", "JV", "N"};
      f.norms = norms_of(f.ring, {"1", "1", "1", "1", "1", "1"});
      f.J = cols(f.ring, {{{"0", "0", "0", "0", "0", "-1"},
                           {"0", "0", "1", "0", "0", "0"},
                           {"0", "-1", "0", "0", "0", "0"},
                           {"0", "0", "0", "0", "1", "0"},
                           {"0", "0", "0", "-1", "0", "0"},
                           {"1", "0", "0", "0", "0", "0"}}});
      f.aux.emplace_back("J1", cols(f.ring, {{{"0", "0", "0", "0", "0", "-1"},
                                              {"0", "0", "-1", "0", "0", "0"},
                                              {"0", "1", "0", "0", "0", "0"},
                                              {"0", "0", "0", "0", "-1", "0"},
                                              {"0", "0", "0", "1", "0", "0"},
                                              {"1", "0", "0", "0", "0", "0"}}}));
      f.aux.emplace_back("J2", cols(f.ring, {{{"0", "0", "0", "0", "0", "1"},
                                              {"0", "0", "1", "0", "0", "0"},
                                              {"0", "-1", "0", "0", "0", "0"},
                                              {"0", "0", "0", "0", "-1", "0"},
                                              {"0", "0", "0", "1", "0", "0"},
                                              {"-1", "0", "0", "0", "0", "0"}}}));
      f.aux.emplace_back("J3", cols(f.ring, {{{"0", "0", "0", "0", "0", "1"},
                                              {"0", "0", "-1", "0", "0", "0"},
                                              {"0", "1", "0", "0", "0", "0"},
                                              {"0", "0", "0", "0", "1", "0"},
                                              {"0", "0", "0", "-1", "0", "0"},
                                              {"-1", "0", "0", "0", "0", "0"}}}));
      break;
    }
    case FrameCase::FlagD1D2: {
      // U = (J J1 N - cos(th) N)/sin(th) with cos(th) = g(J J1 N, N);
      // the J_i actions follow from the definition of U and the
      // distribution rules, see the frame dump
      f.space = Space::FlagC3;
      RingBuilder rb;
      rb.add_pair("c", "s", false, true);
      f.ring = rb.freeze();
      f.labels = {"JN", "U", "JU", "V", "JV", "N"};
      f.norms = norms_of(f.ring, {"1", "1", "1", "1", "1", "1"});
      f.J = cols(f.ring, {{{"0", "0", "0", "0", "0", "-1"},
                           {"0", "0", "1", "0", "0", "0"},
                           {"0", "-1", "0", "0", "0", "0"},
                           {"0", "0", "0", "0", "1", "0"},
                           {"0", "0", "0", "-1", "0", "0"},
                           {"1", "0", "0", "0", "0", "0"}}});
      f.aux.emplace_back("J1", cols(f.ring, {{{"0", "s", "0", "0", "0", "c"},
                                              {"-s", "0", "c", "0", "0", "0"},
                                              {"0", "-c", "0", "0", "0", "s"},
                                              {"0", "0", "0", "0", "-1", "0"},
                                              {"0", "0", "0", "1", "0", "0"},
                                              {"-c", "0", "-s", "0", "0", "0"}}}));
      f.aux.emplace_back("J2", cols(f.ring, {{{"0", "-s", "0", "0", "0", "-c"},
                                              {"s", "0", "-c", "0", "0", "0"},
                                              {"0", "c", "0", "0", "0", "-s"},
                                              {"0", "0", "0", "0", "-1", "0"},
                                              {"0", "0", "0", "1", "0", "0"},
                                              {"c", "0", "s", "0", "0", "0"}}}));
      f.aux.emplace_back("J3", cols(f.ring, {{{"0", "0", "0", "0", "0", "1"},
                                              {"0", "0", "-1", "0", "0", "0"},
                                              {"0", "1", "0", "0", "0", "0"},
                                              {"0", "0", "0", "0", "1", "0"},
                                              {"0", "0", "0", "-1", "0", "0"},
                                              {"-1", "0", "0", "0", "0", "0"}}}));
      f.assumptions = {"s"};
      break;
    }
    case FrameCase::FlagD1D2D3: {
      // N = c1 V1 + s1 (s2 V2 + c2 V3), U1 = c2 V2 - s2 V3,
      // U2 = s1 V1 - c1 (s2 V2 + c2 V3); frame {JV1, JV2, JV3, U1, U2}
      f.space = Space::FlagC3;
      RingBuilder rb;
      rb.add_pair("c1", "s1", true, true);
      rb.add_pair("c2", "s2", true, true);
      f.ring = rb.freeze();
      f.labels = {"JV1", "JV2", "JV3", "U1", "U2", "N"};
      f.norms = norms_of(f.ring, {"1", "1", "1", "1", "1", "1"});
      f.J = cols(f.ring,
                 {{{"0", "0", "0", "0", "-s1", "-c1"},
                   {"0", "0", "0", "-c2", "c1*s2", "-s1*s2"},
                   {"0", "0", "0", "s2", "c1*c2", "-s1*c2"},
                   {"0", "c2", "-s2", "0", "0", "0"},
                   {"s1", "-c1*s2", "-c1*c2", "0", "0", "0"},
                   {"c1", "s1*s2", "s1*c2", "0", "0", "0"}}});
      f.aux.emplace_back(
          "J1", cols(f.ring,
                     {{{"0", "0", "0", "0", "-s1", "-c1"},
                       {"0", "0", "0", "c2", "-c1*s2", "s1*s2"},
                       {"0", "0", "0", "-s2", "-c1*c2", "s1*c2"},
                       {"0", "-c2", "s2", "0", "0", "0"},
                       {"s1", "c1*s2", "c1*c2", "0", "0", "0"},
                       {"c1", "-s1*s2", "-s1*c2", "0", "0", "0"}}}));
      f.aux.emplace_back(
          "J2", cols(f.ring,
                     {{{"0", "0", "0", "0", "s1", "c1"},
                       {"0", "0", "0", "-c2", "c1*s2", "-s1*s2"},
                       {"0", "0", "0", "-s2", "-c1*c2", "s1*c2"},
                       {"0", "c2", "s2", "0", "0", "0"},
                       {"-s1", "-c1*s2", "c1*c2", "0", "0", "0"},
                       {"-c1", "s1*s2", "-s1*c2", "0", "0", "0"}}}));
      f.aux.emplace_back(
          "J3", cols(f.ring,
                     {{{"0", "0", "0", "0", "s1", "c1"},
                       {"0", "0", "0", "c2", "-c1*s2", "s1*s2"},
                       {"0", "0", "0", "s2", "c1*c2", "-s1*c2"},
                       {"0", "-c2", "-s2", "0", "0", "0"},
                       {"-s1", "c1*s2", "-c1*c2", "0", "0", "0"},
                       {"-c1", "-s1*s2", "s1*c2", "0", "0", "0"}}}));
      f.assumptions = {"c1", "s1", "c2", "s2"};
      break;
    }
  }
  return f;
}

Report validate_frame(const Frame& f) {
  Report rep;
  rep.suite = "frame:" + frame_case_name(f.fcase);
  const RingPtr& R = f.ring;
  Scalar zero = R->constant(Rat(0));
  Scalar one = R->constant(Rat(1));

  {
    bool ok = true;
    for (const auto& n : f.norms) ok = ok && n.is_unit();
    rep.add("norms are units", ok);
  }
  auto check_matrix = [&](const std::string& name, const SMat& M, int square) {
    bool ok = true;
    for (int j = 0; j < 6; ++j) {
      auto sq = f.apply(M, f.apply(M, f.basis(j)));
      for (int i = 0; i < 6; ++i)
        ok = ok && sq[static_cast<std::size_t>(i)] ==
                       (i == j ? R->constant(Rat(square)) : zero);
    }
    rep.add(name + "^2 = " + (square < 0 ? "-Id" : "Id"), ok);
    bool orth = true;
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) {
        Scalar lhs = f.inner(f.apply(M, f.basis(i)), f.apply(M, f.basis(j)));
        Scalar rhs = i == j ? f.norms[static_cast<std::size_t>(i)] : zero;
        orth = orth && lhs == rhs;
      }
    rep.add("g(" + name + "X," + name + "Y) = g(X,Y)", orth);
  };
  check_matrix("J", f.J, -1);
  for (const auto& [name, M] : f.aux) {
    if (name == "P") {
      check_matrix(name, M, 1);
      bool anti = true;
      for (int j = 0; j < 6; ++j) {
        auto pj = f.apply(M, f.apply(f.J, f.basis(j)));
        auto jp = f.apply(f.J, f.apply(M, f.basis(j)));
        for (int i = 0; i < 6; ++i)
          anti = anti && pj[static_cast<std::size_t>(i)] +
                                 jp[static_cast<std::size_t>(i)] ==
                             zero;
      }
      rep.add("PJ + JP = 0", anti);
    } else {
      check_matrix(name, M, -1);
      // J commutes with J_o and each J_k, so J*aux is g-symmetric
      bool sym = true;
      for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
          Scalar a = f.inner(f.apply(f.J, f.apply(M, f.basis(i))), f.basis(j));
          Scalar b = f.inner(f.basis(i), f.apply(f.J, f.apply(M, f.basis(j))));
          sym = sym && a == b;
        }
      rep.add("g(J*" + name + " X, Y) symmetric", sym);
    }
  }
  {
    bool diag = true;
    for (int i = 0; i < 6; ++i)
      diag = diag && f.inner(f.basis(i), f.basis(i)) ==
                         f.norms[static_cast<std::size_t>(i)];
    rep.add("gram diagonal with stated norms", diag);
    rep.add("normal has unit length", f.norms[5] == one);
  }
  return rep;
}

std::string frame_dump(const Frame& f) {
  std::ostringstream os;
  os << "frame " << frame_case_name(f.fcase) << " space "
     << space_name(f.space) << "\n";
  os << "labels";
  for (const auto& l : f.labels) os << " " << l;
  os << "\nnorms";
  for (const auto& n : f.norms) os << " " << n.str();
  os << "\n";
  for (const auto& a : f.assumptions) os << "assume-nonzero " << a << "\n";
  auto dump_mat = [&](const std::string& name, const SMat& M) {
    for (std::size_t j = 0; j < 6; ++j) {
      os << name << "(" << f.labels[j] << ") =";
      bool any = false;
      for (std::size_t i = 0; i < 6; ++i) {
        if (M[i][j].is_zero()) continue;
        os << " + (" << M[i][j].str() << ")*" << f.labels[i];
        any = true;
      }
      if (!any) os << " 0";
      os << "\n";
    }
  };
  dump_mat("J", f.J);
  for (const auto& [name, M] : f.aux) dump_mat(name, M);
  return os.str();
}

// ----------------------------------------------------- numeric cross-check

namespace {

using DVec = std::array<double, 6>;

struct DModel {
  double J[6][6];
  std::vector<std::pair<std::string, std::array<std::array<double, 6>, 6>>> aux;
  double G[6][6][6];

  DVec applyJ(const DVec& v) const {
    DVec r{};
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) r[i] += J[i][j] * v[j];
    return r;
  }
  DVec apply_named(const std::string& name, const DVec& v) const {
    for (const auto& [n, m] : aux)
      if (n == name) {
        DVec r{};
        for (int i = 0; i < 6; ++i)
          for (int j = 0; j < 6; ++j) r[i] += m[i][j] * v[j];
        return r;
      }
    throw std::invalid_argument("model tensor " + name + " absent");
  }
  DVec applyG(const DVec& x, const DVec& y) const {
    DVec r{};
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j)
        for (int k = 0; k < 6; ++k) r[k] += G[i][j][k] * x[i] * y[j];
    return r;
  }
};

DModel to_doubles(const Model& m) {
  DModel d{};
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      d.J[i][j] = m.J[i][j].to_double();
      for (int k = 0; k < 6; ++k) d.G[i][j][k] = m.G[i][j][k].to_double();
    }
  for (const auto& [name, A] : m.aux) {
    std::array<std::array<double, 6>, 6> a{};
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) a[i][j] = A[i][j].to_double();
    d.aux.emplace_back(name, a);
  }
  return d;
}

double ddot(const DVec& a, const DVec& b) {
  double s = 0;
  for (int i = 0; i < 6; ++i) s += a[i] * b[i];
  return s;
}
DVec dscale(double c, const DVec& v) {
  DVec r{};
  for (int i = 0; i < 6; ++i) r[i] = c * v[i];
  return r;
}
DVec dadd(const DVec& a, const DVec& b) {
  DVec r{};
  for (int i = 0; i < 6; ++i) r[i] = a[i] + b[i];
  return r;
}
DVec dsub(const DVec& a, const DVec& b) {
  DVec r{};
  for (int i = 0; i < 6; ++i) r[i] = a[i] - b[i];
  return r;
}
DVec unit(int i) {
  DVec r{};
  r[i] = 1;
  return r;
}

double param(const std::map<std::string, double>& p, const std::string& k,
             double dflt) {
  auto it = p.find(k);
  return it == p.end() ? dflt : it->second;
}

struct Instance {
  std::array<DVec, 6> E;
  std::vector<double> sym_values;
};

Instance instantiate(FrameCase c, const DModel& dm,
                     const std::map<std::string, double>& params,
                     const RingPtr& ring) {
  Instance inst;
  inst.sym_values.assign(ring->size(), 0.0);
  auto set_sym = [&](const char* name, double v) {
    SymId s = ring->find(name);
    if (s >= 0) inst.sym_values[static_cast<std::size_t>(s)] = v;
  };
  const DVec f1 = unit(0), jf1 = unit(1), f2 = unit(2), jf2 = unit(3),
             f3 = unit(4), jf3 = unit(5);

  switch (c) {
    case FrameCase::S3xS3Independent: {
      double al = param(params, "alpha", 0.9), be = param(params, "beta", 0.7);
      DVec N = dadd(dscale(std::cos(al), f1),
                    dadd(dscale(std::sin(al) * std::cos(be), jf1),
                         dscale(std::sin(al) * std::sin(be), f2)));
      DVec PN = dm.apply_named("P", N);
      DVec JN = dm.applyJ(N);
      double th1 = ddot(PN, N), th2 = ddot(PN, JN);
      double rho = 1 - th1 * th1 - th2 * th2;
      if (std::abs(rho) < 1e-8)
        throw std::invalid_argument("PN depends on N and JN");
      DVec V = dsub(PN, dadd(dscale(th1, N), dscale(th2, JN)));
      DVec GVN = dm.applyG(V, N);
      inst.E = {JN, V, dm.applyJ(V), GVN, dm.applyJ(GVN), N};
      set_sym("th1", th1);
      set_sym("th2", th2);
      set_sym("rho", rho);
      break;
    }
    case FrameCase::S3xS3Dependent: {
      double ga = param(params, "gamma", 0.8), de = param(params, "delta", 0.35);
      DVec N = dadd(dscale(std::cos(ga), f1), dscale(std::sin(ga), jf1));
      DVec PN = dm.apply_named("P", N);
      DVec JN = dm.applyJ(N);
      double cth = ddot(PN, N), sth = ddot(PN, JN);
      DVec res = dsub(PN, dadd(dscale(cth, N), dscale(sth, JN)));
      if (std::sqrt(ddot(res, res)) > 1e-8)
        throw std::invalid_argument("PN not a combination of N and JN");
      // both V1 and V2 from the (+1)-eigenspace of P on D2
      DVec V1 = dadd(dscale(std::cos(de), jf2), dscale(std::sin(de), jf3));
      DVec V2 = dadd(dscale(-std::sin(de), jf2), dscale(std::cos(de), jf3));
      inst.E = {JN, V1, V2, dm.applyJ(V1), dm.applyJ(V2), N};
      set_sym("c", cth);
      set_sym("s", sth);
      break;
    }
    case FrameCase::CP3D1: {
      double ga = param(params, "gamma", 0.6);
      double mix = param(params, "vmix", 1.0);
      DVec N = dadd(dscale(std::cos(ga), f1), dscale(std::sin(ga), jf1));
      DVec V = dadd(f2, dscale(mix, dadd(dscale(0.6, jf2),
                                         dadd(dscale(0.4, f3), dscale(0.2, jf3)))));
      V = dscale(1.0 / std::sqrt(ddot(V, V)), V);
      DVec GVN = dm.applyG(V, N);
      inst.E = {dm.applyJ(N), V, dm.applyJ(V), GVN, dm.applyJ(GVN), N};
      break;
    }
    case FrameCase::CP3D2: {
      double ga = param(params, "gamma", 0.45);
      DVec N = dadd(dadd(dscale(0.5, f2), dscale(0.3, jf2)),
                    dadd(dscale(0.7, f3), dscale(0.1, jf3)));
      N = dscale(1.0 / std::sqrt(ddot(N, N)), N);
      DVec V = dadd(dscale(std::cos(ga), f1), dscale(std::sin(ga), jf1));
      DVec GVN = dm.applyG(V, N);
      inst.E = {dm.applyJ(N), V, dm.applyJ(V), GVN, dm.applyJ(GVN), N};
      break;
    }
    case FrameCase::CP3Mixed: {
      double th = param(params, "theta", 0.7), g1 = param(params, "gamma1", 0.4);
      if (std::abs(std::cos(th)) < 1e-8 || std::abs(std::sin(th)) < 1e-8)
        throw std::invalid_argument("N does not meet both distributions");
      DVec u1 = dadd(dscale(std::cos(g1), f1), dscale(std::sin(g1), jf1));
      DVec u2 = dadd(dadd(dscale(0.5, f2), dscale(0.2, jf2)),
                     dadd(dscale(0.6, f3), dscale(0.35, jf3)));
      u2 = dscale(1.0 / std::sqrt(ddot(u2, u2)), u2);
      DVec V1 = dscale(std::cos(th), u1), V2 = dscale(std::sin(th), u2);
      DVec N = dadd(V1, V2);
      DVec G12 = dm.applyG(V1, V2);
      DVec V3 = dm.applyG(G12, N);
      inst.E = {dm.applyJ(V1), dm.applyJ(V2), V3, G12, dm.applyJ(G12), N};
      set_sym("c", std::cos(th));
      set_sym("s", std::sin(th));
      break;
    }
    case FrameCase::FlagD1: {
      double ga = param(params, "gamma", 0.3), de = param(params, "delta", 0.55),
             ep = param(params, "eps", 0.75);
      DVec N = dadd(dscale(std::cos(ga), f1), dscale(std::sin(ga), jf1));
      DVec U = dadd(dscale(std::cos(de), f2), dscale(std::sin(de), jf2));
      DVec V = dadd(dscale(std::cos(ep), f3), dscale(std::sin(ep), jf3));
      inst.E = {dm.applyJ(N), U, dm.applyJ(U), V, dm.applyJ(V), N};
      break;
    }
    case FrameCase::FlagD1D2: {
      double p = param(params, "p", 0.3), ga = param(params, "gamma", 0.4),
             de = param(params, "delta", 0.6), ep = param(params, "eps", 0.2);
      if (p < 1e-8 || p > 1 - 1e-8)
        throw std::invalid_argument("N must meet exactly two distributions");
      DVec u1 = dadd(dscale(std::cos(ga), f1), dscale(std::sin(ga), jf1));
      DVec u2 = dadd(dscale(std::cos(de), f2), dscale(std::sin(de), jf2));
      DVec N = dadd(dscale(std::sqrt(1 - p), u1), dscale(std::sqrt(p), u2));
      DVec JJ1N = dm.applyJ(dm.apply_named("J1", N));
      double cth = ddot(JJ1N, N);
      double sth = std::sqrt(1 - cth * cth);
      DVec U = dscale(1.0 / sth, dsub(JJ1N, dscale(cth, N)));
      DVec V = dadd(dscale(std::cos(ep), f3), dscale(std::sin(ep), jf3));
      inst.E = {dm.applyJ(N), U, dm.applyJ(U), V, dm.applyJ(V), N};
      set_sym("c", cth);
      set_sym("s", sth);
      break;
    }
    case FrameCase::FlagD1D2D3: {
      double t1 = param(params, "theta1", 0.7), t2 = param(params, "theta2", 0.5);
      double ga = param(params, "gamma", 0.25), de = param(params, "delta", 0.5),
             ep = param(params, "eps", 0.85);
      double c1 = std::cos(t1), s1 = std::sin(t1), c2 = std::cos(t2),
             s2 = std::sin(t2);
      if (std::abs(c1 * s1 * c2 * s2) < 1e-8)
        throw std::invalid_argument("N must meet all three distributions");
      DVec V1 = dadd(dscale(std::cos(ga), f1), dscale(std::sin(ga), jf1));
      DVec V2 = dadd(dscale(std::cos(de), f2), dscale(std::sin(de), jf2));
      DVec V3 = dadd(dscale(std::cos(ep), f3), dscale(std::sin(ep), jf3));
      DVec N = dadd(dscale(c1, V1),
                    dscale(s1, dadd(dscale(s2, V2), dscale(c2, V3))));
      DVec U1 = dsub(dscale(c2, V2), dscale(s2, V3));
      DVec U2 = dsub(dscale(s1, V1),
                     dscale(c1, dadd(dscale(s2, V2), dscale(c2, V3))));
      inst.E = {dm.applyJ(V1), dm.applyJ(V2), dm.applyJ(V3), U1, U2, N};
      set_sym("c1", c1);
      set_sym("s1", s1);
      set_sym("c2", c2);
      set_sym("s2", s2);
      break;
    }
  }
  return inst;
}

}  // namespace

FrameInstance instantiate_frame(FrameCase c,
                                const std::map<std::string, double>& params) {
  Frame f = build_frame(c);
  DModel dm = to_doubles(build_model(f.space));
  Instance inst = instantiate(c, dm, params, f.ring);
  return FrameInstance{inst.E, inst.sym_values};
}

Report cross_check_frame(FrameCase c, double tol,
                         const std::map<std::string, double>& params) {
  Frame f = build_frame(c);
  DModel dm = to_doubles(build_model(f.space));
  Instance inst = instantiate(c, dm, params, f.ring);

  Report rep;
  rep.suite = "cross-check:" + frame_case_name(c);

  {
    double worst = 0;
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < 6; ++j) {
        double want = i == j ? f.norms[i].eval(inst.sym_values) : 0.0;
        worst = std::max(worst, std::abs(ddot(inst.E[i], inst.E[j]) - want));
      }
    auto& item = rep.add("gram matrix matches stated norms", worst <= tol);
    item.fields["residual"] = std::to_string(worst);
  }

  auto check_action = [&](const std::string& name, const SMat& M, bool is_j) {
    double worst = 0;
    for (std::size_t j = 0; j < 6; ++j) {
      DVec got = is_j ? dm.applyJ(inst.E[j]) : dm.apply_named(name, inst.E[j]);
      DVec want{};
      for (std::size_t i = 0; i < 6; ++i)
        want = dadd(want, dscale(M[i][j].eval(inst.sym_values), inst.E[i]));
      DVec diff = dsub(got, want);
      worst = std::max(worst, std::sqrt(ddot(diff, diff)));
    }
    auto& item = rep.add(name + " action matches frame matrix", worst <= tol);
    item.fields["residual"] = std::to_string(worst);
  };
  check_action("J", f.J, true);
  for (const auto& [name, M] : f.aux) check_action(name, M, false);
  return rep;
}

}  // namespace nk
