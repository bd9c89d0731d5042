#include "nk/numeric_s6.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace nk {

namespace {

Oct normalized(const Oct& o) { return (1.0 / o.norm()) * o; }

Oct project_off(const Oct& v, const Oct& unit) {
  return v - v.dot(unit) * unit;
}

Oct random_imaginary(std::mt19937& rng) {
  std::normal_distribution<double> g;
  Oct r;
  for (int i = 1; i < 8; ++i) r.c[static_cast<std::size_t>(i)] = g(rng);
  return r;
}

Oct random_unit_imaginary(std::mt19937& rng) {
  return normalized(random_imaginary(rng));
}

Oct random_tangent(std::mt19937& rng, const Oct& p) {
  return normalized(project_off(random_imaginary(rng), p));
}

Oct Jp(const Oct& p, const Oct& X) { return cross(p, X); }

// geodesic through p with unit initial velocity u
Oct geodesic(const Oct& p, const Oct& u, double s) {
  return std::cos(s) * p + std::sin(s) * u;
}

// tangential projection extension of Y evaluated at q
Oct extend(const Oct& Y, const Oct& q) { return project_off(Y, q); }

}  // namespace

Oct fd_G(const Oct& p, const Oct& X, const Oct& Y, double step) {
  double n = X.norm();
  if (n == 0.0) return Oct{};
  Oct u = (1.0 / n) * X;
  double h = step;
  auto JY = [&](double s) {
    Oct q = geodesic(p, u, s);
    return cross(q, extend(Y, q));
  };
  auto Yc = [&](double s) {
    Oct q = geodesic(p, u, s);
    return extend(Y, q);
  };
  Oct dJY = (0.5 / h) * (JY(h) - JY(-h));
  Oct dY = (0.5 / h) * (Yc(h) - Yc(-h));
  Oct res = project_off(dJY, p) - Jp(p, project_off(dY, p));
  return n * res;
}

namespace {

// closed-form G on the sphere: tangential part of the cross product.  It is
// validated against fd_G inside the suite, then used wherever a value of G
// at a displaced point would otherwise need nested differencing.
Oct G_closed(const Oct& p, const Oct& X, const Oct& Y) {
  return project_off(cross(X, Y), p);
}

struct SlicePoint {
  double t;
  Oct axis;  // the height axis
  Oct q;     // point on the hypersurface
  Oct N;     // unit normal inside the sphere
  Oct xi;    // -J N
};

SlicePoint sample_slice(double t, std::mt19937& rng) {
  SlicePoint s;
  s.t = t;
  s.axis = Oct::basis(7);
  Oct u = normalized(project_off(random_imaginary(rng), s.axis));
  s.q = t * s.axis + std::sqrt(1 - t * t) * u;
  s.N = (1.0 / std::sqrt(1 - t * t)) * (s.axis - t * s.q);
  s.xi = -1.0 * Jp(s.q, s.N);
  return s;
}

// tangent space of the hypersurface: orthogonal to both q and N
Oct project_slice(const SlicePoint& s, const Oct& v) {
  return project_off(project_off(v, s.q), s.N);
}

Oct random_slice_tangent(const SlicePoint& s, std::mt19937& rng) {
  return normalized(project_slice(s, random_imaginary(rng)));
}

// curve inside the hypersurface through q with velocity X (X slice-tangent)
Oct slice_curve(const SlicePoint& s, const Oct& X, double sp) {
  double r = std::sqrt(1 - s.t * s.t);
  Oct u = (1.0 / r) * (s.q - s.t * s.axis);  // unit point of the small sphere
  Oct v = (1.0 / r) * X;
  double n = v.norm();
  Oct dir = (1.0 / n) * v;
  return s.t * s.axis + r * (std::cos(sp * n) * u + std::sin(sp * n) * dir);
}

SlicePoint at_point(double t, const Oct& axis, const Oct& q) {
  SlicePoint s;
  s.t = t;
  s.axis = axis;
  s.q = q;
  s.N = (1.0 / std::sqrt(1 - t * t)) * (axis - t * q);
  s.xi = -1.0 * Jp(q, s.N);
  return s;
}

// finite-difference Weingarten map: S X = -\nabla_X N projected to the slice
Oct fd_shape(const SlicePoint& s, const Oct& X, double h) {
  auto Nat = [&](double sp) {
    Oct q = slice_curve(s, X, sp);
    return (1.0 / std::sqrt(1 - s.t * s.t)) * (s.axis - s.t * q);
  };
  Oct dN = (0.5 / h) * (Nat(h) - Nat(-h));
  return -1.0 * project_slice(s, dN);
}

// the three almost contact tensors at a slice point, via the closed-form G
Oct phi_at(int i, const SlicePoint& s, const Oct& X) {
  switch (i) {
    case 1: {
      Oct jx = Jp(s.q, X);
      double eta = X.dot(s.xi);
      return jx - eta * s.N;
    }
    case 2:
      return G_closed(s.q, s.xi, X);
    case 3:
      return G_closed(s.q, s.N, X);
  }
  return Oct{};
}

double omega_at(int i, const SlicePoint& s, const Oct& X, const Oct& Y) {
  return phi_at(i, s, X).dot(Y);
}

// (nabla_X phi_i) Y on the slice by central differences
Oct fd_cov_phi(int i, const SlicePoint& s, const Oct& X, const Oct& Y,
               double h) {
  auto value = [&](double sp) {
    Oct q = slice_curve(s, X, sp);
    SlicePoint sq = at_point(s.t, s.axis, q);
    Oct Yq = project_slice(sq, Y);
    return phi_at(i, sq, Yq);
  };
  auto Yc = [&](double sp) {
    Oct q = slice_curve(s, X, sp);
    SlicePoint sq = at_point(s.t, s.axis, q);
    return project_slice(sq, Y);
  };
  Oct dphi = (0.5 / h) * (value(h) - value(-h));
  Oct dY = (0.5 / h) * (Yc(h) - Yc(-h));
  return project_slice(s, dphi) - phi_at(i, s, project_slice(s, dY));
}

// stated closed form of (nabla_X phi_i) Y with the measured shape operator
Oct stated_cov_phi(int i, const SlicePoint& s, const Oct& X, const Oct& Y,
                   double h) {
  Oct SX = fd_shape(s, X, h);
  double eta_x = X.dot(s.xi), eta_y = Y.dot(s.xi);
  double hXY = SX.dot(Y);
  switch (i) {
    case 1: {
      // G(X,Y) - omega3(X,Y) N + eta(Y) SX - h(X,Y) xi
      Oct g = G_closed(s.q, X, Y);
      return g - omega_at(3, s, X, Y) * s.N + eta_y * SX - hXY * s.xi;
    }
    case 2: {
      // eta(Y) phi1 X - eta(X) phi1 Y - omega1(X,Y) xi
      //   + omega2(SX,Y) N + G(phi1 SX, Y) + g(X, S xi) phi3 Y
      Oct Sxi = fd_shape(s, s.xi, h);
      return eta_y * phi_at(1, s, X) - eta_x * phi_at(1, s, Y) -
             omega_at(1, s, X, Y) * s.xi + omega_at(2, s, SX, Y) * s.N +
             G_closed(s.q, phi_at(1, s, SX), Y) + X.dot(Sxi) * phi_at(3, s, Y);
    }
    case 3: {
      // eta(Y) X - g(X,Y) xi - G(SX,Y) + omega3(SX,Y) N
      return eta_y * X - X.dot(Y) * s.xi - G_closed(s.q, SX, Y) +
             omega_at(3, s, SX, Y) * s.N;
    }
  }
  return Oct{};
}

}  // namespace

ShapeEstimate geodesic_sphere_shape(double t, std::uint32_t seed, double step) {
  std::mt19937 rng(seed);
  SlicePoint s = sample_slice(t, rng);
  // orthonormal tangent basis of the slice
  std::array<Oct, 5> basis;
  int found = 0;
  for (int i = 1; i < 8 && found < 5; ++i) {
    Oct v = project_slice(s, Oct::basis(i));
    for (int j = 0; j < found; ++j) v = project_off(v, basis[static_cast<std::size_t>(j)]);
    if (v.norm() > 1e-6) basis[static_cast<std::size_t>(found++)] = normalized(v);
  }
  double m[5][5];
  for (int i = 0; i < 5; ++i) {
    Oct si = fd_shape(s, basis[static_cast<std::size_t>(i)], step);
    for (int j = 0; j < 5; ++j) m[j][i] = si.dot(basis[static_cast<std::size_t>(j)]);
  }
  // eigenvalues via Jacobi iteration on the symmetrized matrix
  double a[5][5];
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) a[i][j] = 0.5 * (m[i][j] + m[j][i]);
  for (int sweep = 0; sweep < 60; ++sweep) {
    int p = 0, q = 1;
    double big = 0;
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j)
        if (std::abs(a[i][j]) > big) {
          big = std::abs(a[i][j]);
          p = i;
          q = j;
        }
    if (big < 1e-14) break;
    double th = 0.5 * std::atan2(2 * a[p][q], a[q][q] - a[p][p]);
    double c = std::cos(th), sn = std::sin(th);
    for (int k = 0; k < 5; ++k) {
      double akp = a[k][p], akq = a[k][q];
      a[k][p] = c * akp - sn * akq;
      a[k][q] = sn * akp + c * akq;
    }
    for (int k = 0; k < 5; ++k) {
      double apk = a[p][k], aqk = a[q][k];
      a[p][k] = c * apk - sn * aqk;
      a[q][k] = sn * apk + c * aqk;
    }
  }
  double lo = a[0][0], hi = a[0][0], mean = 0;
  for (int i = 0; i < 5; ++i) {
    lo = std::min(lo, a[i][i]);
    hi = std::max(hi, a[i][i]);
    mean += a[i][i] / 5;
  }
  return {mean, hi - lo};
}

double fd_covariant_phi_residual(int i, double t, std::uint32_t seed,
                                 double step) {
  std::mt19937 rng(seed);
  SlicePoint s = sample_slice(t, rng);
  Oct X = random_slice_tangent(s, rng);
  Oct Y = random_slice_tangent(s, rng);
  Oct diff = fd_cov_phi(i, s, X, Y, step) - stated_cov_phi(i, s, X, Y, step);
  return diff.norm();
}

Report numeric_s6_suite(const S6Config& cfg) {
  Report rep;
  rep.suite = "numeric-s6";
  std::mt19937 rng(cfg.seed);
  auto record = [&](const std::string& id, double worst, double tol) {
    auto& item = rep.add(id, worst <= tol);
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << worst;
    item.fields["residual"] = os.str();
  };

  {
    double worst = 0;
    for (int k = 0; k < cfg.samples; ++k) {
      Oct x = random_unit_imaginary(rng), y = random_unit_imaginary(rng);
      worst = std::max(worst, std::abs((x * y).norm() - 1.0));
    }
    record("composition algebra |xy| = |x||y|", worst, 1e-12);
  }
  {
    double worst = 0;
    for (int k = 0; k < cfg.samples; ++k) {
      Oct p = random_unit_imaginary(rng);
      Oct x = random_tangent(rng, p), y = random_tangent(rng, p);
      Oct jx = Jp(p, x), jy = Jp(p, y);
      worst = std::max(worst, std::abs(jx.dot(jy) - x.dot(y)));
      worst = std::max(worst, std::abs(jx.dot(p)));
    }
    record("J_p is an isometry of the tangent space", worst, 1e-12);
  }
  {
    double worst = 0;
    for (int k = 0; k < cfg.samples; ++k) {
      Oct p = random_unit_imaginary(rng);
      Oct x = random_tangent(rng, p);
      worst = std::max(worst, fd_G(p, x, x, cfg.step).norm());
    }
    record("G skew-symmetry: |G(X,X)|", worst, cfg.tol_first);
  }
  {
    double worst = 0;
    for (int k = 0; k < cfg.samples; ++k) {
      Oct p = random_unit_imaginary(rng);
      Oct x = random_tangent(rng, p);
      Oct y = normalized(project_off(random_tangent(rng, p), x));
      Oct g = fd_G(p, x, y, cfg.step);
      double want = 1.0 - std::pow(Jp(p, x).dot(y), 2);  // orthonormal X, Y
      worst = std::max(worst, std::abs(g.dot(g) - want));
    }
    record("norm identity |G(X,Y)|^2 (alpha = 1)", worst, cfg.tol_first);
  }
  {
    // the closed form used for nested evaluations agrees with fd_G
    double worst = 0;
    for (int k = 0; k < cfg.samples; ++k) {
      Oct p = random_unit_imaginary(rng);
      Oct x = random_tangent(rng, p), y = random_tangent(rng, p);
      Oct diff = fd_G(p, x, y, cfg.step) - G_closed(p, x, y);
      worst = std::max(worst, diff.norm());
    }
    record("G equals the tangential cross product", worst, cfg.tol_first);
  }
  {
    // derivative identity by second differences:
    // (nabla_X G)(Y,Z) = g(Y,JZ) X + g(X,Z) JY - g(X,Y) JZ
    double worst = 0;
    for (int k = 0; k < cfg.samples / 4; ++k) {
      Oct p = random_unit_imaginary(rng);
      Oct x = random_tangent(rng, p), y = random_tangent(rng, p),
          z = random_tangent(rng, p);
      auto Gc = [&](double s) {
        Oct q = geodesic(p, x, s);
        return fd_G(q, extend(y, q), extend(z, q), cfg.step);
      };
      double h = cfg.step;
      Oct dG = (0.5 / h) * (Gc(h) - Gc(-h));
      Oct covG = project_off(dG, p);
      auto dext = [&](const Oct& v) {
        Oct vp = extend(v, geodesic(p, x, h)), vm = extend(v, geodesic(p, x, -h));
        return project_off((0.5 / h) * (vp - vm), p);
      };
      covG = covG - fd_G(p, dext(y), z, cfg.step) - fd_G(p, y, dext(z), cfg.step);
      Oct want = y.dot(Jp(p, z)) * x + x.dot(z) * Jp(p, y) -
                 x.dot(y) * Jp(p, z);
      worst = std::max(worst, (covG - want).norm());
    }
    record("derivative identity for G by second differences", worst,
           cfg.tol_second);
  }
  {
    // umbilical family: eigenvalue spread and mean value
    double worst_spread = 0;
    for (double t : {0.0, 0.3, 0.6, 0.9}) {
      ShapeEstimate est = geodesic_sphere_shape(t, cfg.seed, cfg.step);
      worst_spread = std::max(worst_spread, est.spread);
      if (t == 0.0)
        record("height 0: totally geodesic, mean curvature",
               std::abs(est.mean), cfg.tol_shape);
      if (t == 0.6) {
        record("height 0.6: mean principal curvature = 3/4",
               std::abs(est.mean - 0.75), cfg.tol_shape);
        rep.add("height 0.6: sectional curvature 1 + lambda^2 > 1",
                1.0 + est.mean * est.mean > 1.0);
      }
    }
    record("umbilical family: eigenvalue spread", worst_spread, cfg.tol_shape);
  }
  {
    // the Gauss split of the ambient derivative of phi2 Y: its normal
    // coefficient is g(SX, phi2 Y) = -omega2(SX, Y)
    double worst = 0;
    for (int k = 0; k < cfg.samples / 4; ++k) {
      std::mt19937 r2(cfg.seed + 1000 + static_cast<std::uint32_t>(k));
      SlicePoint s = sample_slice(0.45, r2);
      Oct X = random_slice_tangent(s, r2), Y = random_slice_tangent(s, r2);
      auto value = [&](double sp) {
        Oct q = slice_curve(s, X, sp);
        SlicePoint sq = at_point(s.t, s.axis, q);
        return phi_at(2, sq, project_slice(sq, Y));
      };
      double h = cfg.step;
      Oct d = (0.5 / h) * (value(h) - value(-h));
      double ncomp = project_off(d, s.q).dot(s.N);
      Oct SX = fd_shape(s, X, h);
      worst = std::max(worst, std::abs(ncomp + omega_at(2, s, SX, Y)));
    }
    record("normal part of the phi2 derivative equals -omega2(SX,Y)", worst,
           cfg.tol_first);
  }
  {
    double worst0 = 0;  // Sasakian identity for phi3 on the geodesic slice
    for (int k = 0; k < 8; ++k) {
      std::mt19937 r2(cfg.seed + static_cast<std::uint32_t>(k));
      SlicePoint s = sample_slice(0.0, r2);
      Oct X = random_slice_tangent(s, r2), Y = random_slice_tangent(s, r2);
      Oct lhs = fd_cov_phi(3, s, X, Y, cfg.step);
      Oct want = Y.dot(s.xi) * X - X.dot(Y) * s.xi;
      worst0 = std::max(worst0, (lhs - want).norm());
    }
    record("phi3 is Sasakian on the totally geodesic slice", worst0,
           cfg.tol_first);
  }
  {
    double worst = 0;
    for (int i = 1; i <= 3; ++i)
      for (double t : {0.0, 0.45, 0.8})
        for (int k = 0; k < cfg.samples / 16; ++k)
          worst = std::max(
              worst, fd_covariant_phi_residual(
                         i, t, cfg.seed + static_cast<std::uint32_t>(16 * k),
                         cfg.step));
    record("covariant derivative formulas on the slices", worst, cfg.tol_first);
  }
  {
    // halving the step shrinks a truncation-dominated residual ~4x
    auto residual = [&](double h) {
      std::mt19937 r2(cfg.seed);
      double worst = 0;
      for (int k = 0; k < 8; ++k) {
        Oct p = random_unit_imaginary(r2);
        Oct x = random_tangent(r2, p), y = random_tangent(r2, p);
        Oct diff = fd_G(p, x, y, h) - G_closed(p, x, y);
        worst = std::max(worst, diff.norm());
      }
      return worst;
    };
    double r1 = residual(2e-2), r2 = residual(1e-2);
    double ratio = r1 / r2;
    auto& item = rep.add("O(step^2) convergence under step halving",
                         ratio > 3.0 && ratio < 5.0);
    std::ostringstream os;
    os.precision(3);
    os << ratio;
    item.fields["ratio"] = os.str();
  }
  return rep;
}

}  // namespace nk
