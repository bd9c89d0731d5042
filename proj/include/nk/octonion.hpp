// Octonion arithmetic via the Cayley-Dickson doubling of the quaternions:
// (a,b)(c,d) = (ac - conj(d) b, d a + b conj(c)), basis 1, e1..e7 with
// e1 e2 = e3, e1 e4 = e5, e2 e4 = e6, e3 e4 = e7.  The sign convention is
// pinned by unit tests; it fixes the cross product and hence J and G.
#pragma once

#include <array>
#include <cmath>

namespace nk {

struct Quat {
  std::array<double, 4> c{};  // 1, i, j, k

  friend Quat operator+(const Quat& a, const Quat& b) {
    Quat r;
    for (int i = 0; i < 4; ++i) r.c[i] = a.c[i] + b.c[i];
    return r;
  }
  friend Quat operator-(const Quat& a, const Quat& b) {
    Quat r;
    for (int i = 0; i < 4; ++i) r.c[i] = a.c[i] - b.c[i];
    return r;
  }
  friend Quat operator*(const Quat& a, const Quat& b) {
    const auto &x = a.c, &y = b.c;
    Quat r;
    r.c[0] = x[0] * y[0] - x[1] * y[1] - x[2] * y[2] - x[3] * y[3];
    r.c[1] = x[0] * y[1] + x[1] * y[0] + x[2] * y[3] - x[3] * y[2];
    r.c[2] = x[0] * y[2] - x[1] * y[3] + x[2] * y[0] + x[3] * y[1];
    r.c[3] = x[0] * y[3] + x[1] * y[2] - x[2] * y[1] + x[3] * y[0];
    return r;
  }
  Quat conj() const { return Quat{{c[0], -c[1], -c[2], -c[3]}}; }
};

struct Oct {
  std::array<double, 8> c{};  // 1, e1, e2, e3, e4, e5, e6, e7

  static Oct basis(int i) {
    Oct r;
    r.c[static_cast<std::size_t>(i)] = 1.0;
    return r;
  }
  Quat lo() const { return Quat{{c[0], c[1], c[2], c[3]}}; }
  Quat hi() const { return Quat{{c[4], c[5], c[6], c[7]}}; }
  static Oct join(const Quat& a, const Quat& b) {
    Oct r;
    for (int i = 0; i < 4; ++i) {
      r.c[static_cast<std::size_t>(i)] = a.c[static_cast<std::size_t>(i)];
      r.c[static_cast<std::size_t>(i + 4)] = b.c[static_cast<std::size_t>(i)];
    }
    return r;
  }

  friend Oct operator+(const Oct& a, const Oct& b) {
    Oct r;
    for (int i = 0; i < 8; ++i) r.c[i] = a.c[i] + b.c[i];
    return r;
  }
  friend Oct operator-(const Oct& a, const Oct& b) {
    Oct r;
    for (int i = 0; i < 8; ++i) r.c[i] = a.c[i] - b.c[i];
    return r;
  }
  friend Oct operator*(double s, const Oct& a) {
    Oct r;
    for (int i = 0; i < 8; ++i) r.c[i] = s * a.c[i];
    return r;
  }
  friend Oct operator*(const Oct& x, const Oct& y) {
    Quat a = x.lo(), b = x.hi(), cc = y.lo(), d = y.hi();
    return join(a * cc - d.conj() * b, d * a + b * cc.conj());
  }

  double dot(const Oct& o) const {
    double s = 0;
    for (int i = 0; i < 8; ++i) s += c[i] * o.c[i];
    return s;
  }
  double norm() const { return std::sqrt(dot(*this)); }
};

// imaginary octonions carry the cross product x X y = (xy - yx)/2 and the
// euclidean inner product; J_p X = p X X on the unit sphere
inline Oct cross(const Oct& x, const Oct& y) {
  return 0.5 * (x * y - y * x);
}

}  // namespace nk
