#include <random>
#include <cmath>

#include "doctest.h"
#include "nk/numeric_s6.hpp"

using namespace nk;

TEST_CASE("octonion multiplication table is the pinned convention") {
  auto e = [](int i) { return Oct::basis(i); };
  auto is = [](const Oct& a, const Oct& b) { return (a - b).norm() < 1e-15; };
  CHECK(is(e(1) * e(2), e(3)));
  CHECK(is(e(1) * e(4), e(5)));
  CHECK(is(e(2) * e(4), e(6)));
  CHECK(is(e(3) * e(4), e(7)));
  CHECK(is(e(1) * e(1), -1.0 * e(0)));
  CHECK(is(e(7) * e(7), -1.0 * e(0)));
  // nonassociativity: (e1 e2) e4 = e7 but e1 (e2 e4) = -e7
  CHECK(is((e(1) * e(2)) * e(4), e(7)));
  CHECK(is(e(1) * (e(2) * e(4)), -1.0 * e(7)));
}

TEST_CASE("full numeric suite passes at the stated tolerances") {
  Report rep = numeric_s6_suite({});
  INFO(rep.to_text());
  CHECK(rep.passed());
}

TEST_CASE("suite is deterministic for a fixed seed") {
  Report a = numeric_s6_suite({});
  Report b = numeric_s6_suite({});
  CHECK(a.to_json() == b.to_json());
}

TEST_CASE("geodesic sphere shape at selected heights") {
  ShapeEstimate e0 = geodesic_sphere_shape(0.0, 7, 1e-4);
  CHECK(std::abs(e0.mean) < 1e-6);
  CHECK(e0.spread < 1e-6);
  ShapeEstimate e6 = geodesic_sphere_shape(0.6, 7, 1e-4);
  CHECK(std::abs(e6.mean - 0.75) < 1e-6);  // t / sqrt(1 - t^2)
  CHECK(e6.spread < 1e-6);
}

TEST_CASE("skewness of the finite-difference G at the sample tolerance") {
  std::mt19937 rng(2024);
  std::normal_distribution<double> g;
  for (int k = 0; k < 16; ++k) {
    Oct p{}, x{};
    for (int i = 1; i < 8; ++i) {
      p.c[static_cast<std::size_t>(i)] = g(rng);
      x.c[static_cast<std::size_t>(i)] = g(rng);
    }
    p = (1.0 / p.norm()) * p;
    x = x - x.dot(p) * p;
    x = (1.0 / x.norm()) * x;
    CHECK(fd_G(p, x, x, 1e-4).norm() < 1e-6);
  }
}
