#include "doctest.h"
#include "nk/frames.hpp"

using namespace nk;

TEST_CASE("every frame validates with zero residuals") {
  for (FrameCase c : kAllFrameCases) {
    Frame f = build_frame(c);
    Report rep = validate_frame(f);
    INFO(rep.to_text());
    CHECK(rep.passed());
  }
}

TEST_CASE("stated norms") {
  {
    Frame f = build_frame(FrameCase::S3xS3Independent);
    // gram = diag(1, rho, rho, rho, rho) with rho = 1 - th1^2 - th2^2
    CHECK(f.norms[0] == f.ring->constant(Rat(1)));
    Scalar rho = f.ring->sym("rho");
    for (int i = 1; i <= 4; ++i) CHECK(f.norms[i] == rho);
    Scalar expand = f.ring->parse("1 - th1^2 - th2^2");
    CHECK(rho == expand);
  }
  {
    Frame f = build_frame(FrameCase::CP3Mixed);
    CHECK(f.norms[0] == f.ring->parse("c^2"));
    CHECK(f.norms[1] == f.ring->parse("s^2"));
    CHECK(f.norms[2] == f.ring->parse("c^2*s^2"));
  }
  {
    Frame f = build_frame(FrameCase::FlagD1);
    for (int i = 0; i < 6; ++i) CHECK(f.norms[i] == f.ring->constant(Rat(1)));
  }
}

TEST_CASE("independent-case P matrix is the stated one") {
  Frame f = build_frame(FrameCase::S3xS3Independent);
  const SMat& P = f.aux[0].second;
  const RingPtr& R = f.ring;
  // definitional column: P N = V + th1 N + th2 JN
  CHECK(P[0][5] == R->sym("th2"));
  CHECK(P[1][5] == R->constant(Rat(1)));
  CHECK(P[5][5] == R->sym("th1"));
  // the (JV, V) entry carries th1^2 + th2^2 - 1 = -rho
  CHECK(P[0][2] == R->parse("th1^2 + th2^2 - 1"));
  // G(V,N) and JG(V,N) are P-eigenvectors
  CHECK(P[3][3] == R->constant(Rat(1)));
  CHECK(P[4][4] == R->constant(Rat(-1)));
}

TEST_CASE("cp3 mixed: Jo V3 = -sin^2 JV1 - cos^2 JV2") {
  Frame f = build_frame(FrameCase::CP3Mixed);
  const SMat& Jo = f.aux[0].second;
  CHECK(Jo[0][2] == f.ring->parse("-s^2"));
  CHECK(Jo[1][2] == f.ring->parse("-c^2"));
  for (int i = 2; i < 6; ++i) CHECK(Jo[i][2].is_zero());
}

TEST_CASE("numeric cross-check against the explicit model") {
  for (FrameCase c : kAllFrameCases) {
    Report rep = cross_check_frame(c, 1e-10);
    INFO(rep.to_text());
    CHECK(rep.passed());
  }
}

TEST_CASE("cross-check at the canonical orthonormal instance N = f1, V = f2") {
  Report rep = cross_check_frame(FrameCase::CP3D1, 1e-10,
                                 {{"gamma", 0.0}, {"vmix", 0.0}});
  CHECK(rep.passed());
}

TEST_CASE("degenerate instantiations are rejected") {
  CHECK_THROWS_AS(cross_check_frame(FrameCase::S3xS3Independent, 1e-10,
                                    {{"beta", 0.0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(cross_check_frame(FrameCase::CP3Mixed, 1e-10, {{"theta", 0.0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(cross_check_frame(FrameCase::FlagD1D2, 1e-10, {{"p", 0.0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(cross_check_frame(FrameCase::FlagD1D2D3, 1e-10,
                                    {{"theta2", 0.0}}),
                  std::invalid_argument);
}

TEST_CASE("frame dump is stable and mentions the derived actions") {
  Frame f = build_frame(FrameCase::FlagD1D2);
  std::string d = frame_dump(f);
  CHECK(d.find("J1(U)") != std::string::npos);
  CHECK(d == frame_dump(build_frame(FrameCase::FlagD1D2)));
}

TEST_CASE("frame dumps match the golden files") {
  for (FrameCase c : kAllFrameCases) {
    std::string want =
        read_file(std::string(NK_DATA_DIR "/../tests/golden/frame_") +
                  frame_case_name(c) + ".txt");
    CHECK(frame_dump(build_frame(c)) == want);
  }
}
