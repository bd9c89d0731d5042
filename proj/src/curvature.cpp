#include "nk/curvature.hpp"

#include <stdexcept>

namespace nk {

namespace {

FrameVec axpy(const Scalar& c, const FrameVec& v, FrameVec acc) {
  for (std::size_t i = 0; i < 6; ++i) acc[i] = acc[i] + c * v[i];
  return acc;
}

const SMat& aux_of(const Frame& f, const char* name) {
  for (const auto& [n, m] : f.aux)
    if (n == name) return m;
  throw std::invalid_argument(std::string("frame carries no tensor ") + name);
}

}  // namespace

ShapeOp ShapeOp::symbolic(const Frame& f) {
  ShapeOp s;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      // coefficient of E_j in S E_i: h(i,j) / |E_j|^2
      Scalar inv = f.norms[static_cast<std::size_t>(j)].inverse();
      s.cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] =
          LinForm::unknown(Unknown::h(i + 1, j + 1), inv);
    }
  return s;
}

ShapeOp ShapeOp::identity(const Frame& f) {
  ShapeOp s;
  for (int i = 0; i < 5; ++i)
    s.cols[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] =
        LinForm(f.ring->constant(Rat(1)));
  return s;
}

std::array<LinForm, 6> ShapeOp::apply(const Frame&, const FrameVec& v) const {
  std::array<LinForm, 6> r;
  for (std::size_t j = 0; j < 6; ++j)
    for (std::size_t i = 0; i < 6; ++i) {
      if (cols[j][i].is_zero() || v[i].is_zero()) continue;
      r[j] = r[j] + v[i] * cols[j][i];
    }
  return r;
}

FrameVec riemann(const Frame& f, const FrameVec& X, const FrameVec& Y,
                 const FrameVec& Z) {
  const RingPtr& R = f.ring;
  auto g = [&](const FrameVec& a, const FrameVec& b) { return f.inner(a, b); };
  auto J = [&](const FrameVec& v) { return f.apply(f.J, v); };
  FrameVec out;
  for (auto& c : out) c = R->constant(Rat(0));
  Scalar half = R->constant(Rat(1, 2));
  Scalar quarter = R->constant(Rat(1, 4));

  switch (f.space) {
    case Space::S6: {
      // round metric: R(X,Y)Z = g(Y,Z) X - g(X,Z) Y
      out = axpy(g(Y, Z), X, out);
      out = axpy(-g(X, Z), Y, out);
      break;
    }
    case Space::S3xS3: {
      const SMat& Pm = aux_of(f, "P");
      auto P = [&](const FrameVec& v) { return f.apply(Pm, v); };
      Scalar fivq = R->constant(Rat(5, 4));
      out = axpy(fivq * g(Y, Z), X, out);
      out = axpy(-(fivq * g(X, Z)), Y, out);
      FrameVec JX = J(X), JY = J(Y);
      out = axpy(quarter * g(JY, Z), JX, out);
      out = axpy(-(quarter * g(JX, Z)), JY, out);
      out = axpy(-(half * g(JX, Y)), J(Z), out);
      FrameVec PX = P(X), PY = P(Y);
      out = axpy(g(PY, Z), PX, out);
      out = axpy(-g(PX, Z), PY, out);
      FrameVec JPX = J(PX), JPY = J(PY);
      out = axpy(g(JPY, Z), JPX, out);
      out = axpy(-g(JPX, Z), JPY, out);
      break;
    }
    case Space::CP3: {
      const SMat& Jom = aux_of(f, "Jo");
      auto Jo = [&](const FrameVec& v) { return f.apply(Jom, v); };
      Scalar fivq = R->constant(Rat(5, 4));
      out = axpy(fivq * g(Y, Z), X, out);
      out = axpy(-(fivq * g(X, Z)), Y, out);
      FrameVec JX = J(X), JY = J(Y);
      out = axpy(-(quarter * g(JY, Z)), JX, out);
      out = axpy(quarter * g(JX, Z), JY, out);
      out = axpy(-(half * g(X, JY)), J(Z), out);
      FrameVec JoX = Jo(X), JoY = Jo(Y);
      out = axpy(half * g(JoY, Z), JoX, out);
      out = axpy(-(half * g(JoX, Z)), JoY, out);
      out = axpy(g(X, JoY), Jo(Z), out);
      FrameVec JJoX = J(JoX), JJoY = J(JoY);
      out = axpy(half * g(JJoY, Z), X, out);
      out = axpy(-(half * g(JJoX, Z)), Y, out);
      out = axpy(half * g(Y, Z), JJoX, out);
      out = axpy(-(half * g(X, Z)), JJoY, out);
      out = axpy(g(JJoY, Z), JJoX, out);
      out = axpy(-g(JJoX, Z), JJoY, out);
      break;
    }
    case Space::FlagC3: {
      out = axpy(quarter * g(Y, Z), X, out);
      out = axpy(-(quarter * g(X, Z)), Y, out);
      FrameVec JX = J(X), JY = J(Y);
      out = axpy(-(quarter * g(JY, Z)), JX, out);
      out = axpy(quarter * g(JX, Z), JY, out);
      out = axpy(-(half * g(X, JY)), J(Z), out);
      for (const char* name : {"J1", "J2", "J3"}) {
        const SMat& Jk = aux_of(f, name);
        FrameVec JkX = f.apply(Jk, X), JkY = f.apply(Jk, Y);
        out = axpy(half * g(JkY, Z), JkX, out);
        out = axpy(-(half * g(JkX, Z)), JkY, out);
        out = axpy(g(X, JkY), f.apply(Jk, Z), out);
      }
      break;
    }
  }
  return out;
}

namespace {

bool tangent(const FrameVec& v) { return v[5].is_zero(); }

// g(R, S W) using the diagonal Gram matrix
LinForm pair_with_shape(const Frame& f, const ShapeOp& S, const FrameVec& R,
                        const FrameVec& W) {
  std::array<LinForm, 6> SW = S.apply(f, W);
  LinForm acc;
  for (std::size_t j = 0; j < 6; ++j) {
    if (R[j].is_zero() || SW[j].is_zero()) continue;
    acc = acc + (R[j] * f.norms[j]) * SW[j];
  }
  return acc;
}

}  // namespace

LinForm cyclic_sum(const Frame& f, const ShapeOp& S, const FrameVec& X,
                   const FrameVec& Y, const FrameVec& Z, const FrameVec& W) {
  if (!tangent(X) || !tangent(Y) || !tangent(Z) || !tangent(W))
    throw std::invalid_argument("cyclic_sum: arguments must be tangent");
  LinForm acc = pair_with_shape(f, S, riemann(f, X, Y, Z), W);
  acc = acc + pair_with_shape(f, S, riemann(f, Y, W, Z), X);
  acc = acc + pair_with_shape(f, S, riemann(f, W, X, Z), Y);
  return acc;
}

Scalar gauss_sectional(const std::array<Scalar, 5>& lambda, int i, int j) {
  if (i < 1 || j < 1 || i > 5 || j > 5 || i == j)
    throw std::invalid_argument("gauss_sectional: need a plane i != j");
  return Scalar(Rat(1)) + lambda[static_cast<std::size_t>(i - 1)] *
                              lambda[static_cast<std::size_t>(j - 1)];
}

Frame build_s6_frame() {
  Frame f;
  f.fcase = FrameCase::S3xS3Independent;  // tag unused, the space decides
  f.space = Space::S6;
  f.ring = RingBuilder{}.freeze();
  f.labels = {"JN", "V", "JV", "G(N,V)", "JG(N,V)", "N"};
  for (std::size_t i = 0; i < 6; ++i) f.norms[i] = f.ring->constant(Rat(1));
  // with N = f1, V = f2 in the point model
  const char* jc[6][6] = {{"0", "0", "0", "0", "0", "1"},
                          {"0", "0", "-1", "0", "0", "0"},
                          {"0", "1", "0", "0", "0", "0"},
                          {"0", "0", "0", "0", "-1", "0"},
                          {"0", "0", "0", "1", "0", "0"},
                          {"-1", "0", "0", "0", "0", "0"}};
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) f.J[i][j] = f.ring->parse(jc[i][j]);
  return f;
}

}  // namespace nk
