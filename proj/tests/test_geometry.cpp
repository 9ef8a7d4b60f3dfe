#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "homgr/geometry.hpp"

using namespace homgr;

namespace {

void expect_vec_near(const Vec3& a, const Vec3& b, double tol) {
  EXPECT_LE((a - b).norm(), tol) << "a = " << a.transpose() << "\nb = " << b.transpose();
}

} // namespace

TEST(Polyline, SquareAreaAndNormal) {
  const auto loop = make_loop(1.0, 0.0, 4);
  const Vec3 a = loop.path.areal_vector();
  expect_vec_near(a, Vec3(0, 0, 1), 1e-12);
  EXPECT_NEAR(loop.path.length(), 4.0, 1e-12);
  for (std::size_t i = 0; i < 4; ++i) {
    const auto [p, q] = loop.path.segment(i);
    EXPECT_NEAR((q - p).norm(), 1.0, 1e-12);
  }
}

TEST(Polyline, HandBuiltUnitSquare) {
  const Polyline sq({{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}}, true);
  EXPECT_EQ(sq.areal_vector(), Vec3(0, 0, 1));
  EXPECT_EQ(sq.reversed().areal_vector(), Vec3(0, 0, -1));
  // Translation does not change the areal vector of a closed path.
  std::vector<Vec3> shifted;
  for (const auto& v : sq.vertices()) shifted.push_back(v + Vec3(5, -3, 2));
  expect_vec_near(Polyline(shifted, true).areal_vector(), Vec3(0, 0, 1), 1e-13);
}

TEST(Polyline, TiltedLoopIsHorizontalAtRightAngle) {
  const auto loop = make_loop(1.0, kPi / 2, 4);
  const Vec3 a = loop.path.areal_vector();
  EXPECT_NEAR(a.z(), 0.0, 1e-12);
  EXPECT_NEAR(a.norm(), 1.0, 1e-12);
  expect_vec_near(a, Vec3(0, 1, 0), 1e-12);
}

TEST(Polyline, MakeLoopAreaIsExact) {
  for (int n : {3, 4, 7, 16, 64, 257}) {
    for (double area : {1.0, 1e3, 1e6}) {
      for (double tilt : {0.0, 0.3, kPi / 2, 2.0}) {
        const auto loop = make_loop(area, tilt, n);
        const Vec3 a = loop.path.areal_vector();
        EXPECT_NEAR(a.norm() / area, 1.0, 1e-12);
        expect_vec_near(a / area, loop_normal(tilt), 1e-12);
        expect_vec_near(loop.areal_vector, a, 1e-12 * area);
      }
    }
  }
}

TEST(Polyline, CyclicRelabelAndReversal) {
  const auto loop = make_loop(2.5e4, 0.7, 11);
  const Vec3 a = loop.path.areal_vector();
  for (std::size_t s = 0; s < 11; ++s) expect_vec_near(loop.path.rotated(s).areal_vector(), a, 1e-9);
  expect_vec_near(loop.path.reversed().areal_vector(), -a, 1e-9);
  EXPECT_NEAR(loop.path.reversed().length(), loop.path.length(), 1e-9);
}

TEST(Polyline, InscribedPolygonConvergesQuadratically) {
  // Inscribed in the circle of area A: error ~ (2 pi^2 / 3) / n^2.
  const double area = 1e6;
  const double r = std::sqrt(area / kPi);
  std::vector<double> err;
  for (int n : {8, 16, 32}) {
    const double got = regular_polygon(r, Vec3::UnitZ(), n).areal_vector().norm();
    err.push_back(std::abs(got - area) / area);
  }
  EXPECT_NEAR(err[0] / err[1], 4.0, 0.1);
  EXPECT_NEAR(err[1] / err[2], 4.0, 0.05);
  EXPECT_NEAR(err[2] * 32.0 * 32.0, 2.0 * kPi * kPi / 3.0, 0.02);
}

TEST(Polyline, RejectsBadInput) {
  EXPECT_THROW(Polyline({{0, 0, 0}, {1, 0, 0}}, true), std::domain_error);
  EXPECT_THROW(Polyline({{0, 0, 0}}, false), std::domain_error);
  EXPECT_THROW(Polyline({{0, 0, 0}, {0, 0, 0}, {1, 0, 0}}, true), std::domain_error);
  EXPECT_THROW(Polyline({{0, 0, 0}, {NAN, 0, 0}, {1, 0, 0}}, true), std::domain_error);
  EXPECT_THROW(Polyline({{0, 0, 0}, {2e5, 0, 0}}, false), std::domain_error);
  const Polyline open({{0, 0, 0}, {1, 0, 0}}, false);
  EXPECT_THROW(open.areal_vector(), std::domain_error);
  EXPECT_THROW(make_loop(0.0, 0.0), std::domain_error);
  EXPECT_THROW(make_loop(-1.0, 0.0), std::domain_error);
  EXPECT_THROW(make_loop(1.0, 0.0, 2), std::domain_error);
  EXPECT_THROW(regular_polygon(0.0, Vec3::UnitZ(), 8), std::domain_error);
  // Larger than the local-frame region allows.
  EXPECT_THROW(make_loop(1e11, 0.0), std::domain_error);
}

TEST(DualArm, FlatOrientation) {
  const auto g = make_dual_arm(1000.0, 100.0, 0.0, 0.0);
  expect_vec_near(g.short_unit, Vec3(0, 1, 0), 1e-15);
  expect_vec_near(g.long_unit, Vec3(0, 0, 1), 1e-15);
  expect_vec_near(g.b, Vec3(0, 100, 0), 1e-12);
  expect_vec_near(g.d, Vec3(0, 0, 1000), 1e-12);
  expect_vec_near(g.c, Vec3(0, 100, 1000), 1e-12);
  EXPECT_DOUBLE_EQ(g.area(), 1e5);
}

TEST(DualArm, ArmLengthsAndClosure) {
  for (double a : {0.0, 0.4, 1.3, 3.0}) {
    for (double b : {0.0, 0.9, 2.2, 5.0}) {
      const auto g = make_dual_arm(750.0, 120.0, a, b);
      EXPECT_NEAR((g.b - g.a).norm(), 120.0, 1e-10);
      EXPECT_NEAR((g.c - g.d).norm(), 120.0, 1e-10);
      EXPECT_NEAR((g.d - g.a).norm(), 750.0, 1e-10);
      EXPECT_NEAR((g.c - g.b).norm(), 750.0, 1e-10);
      // ABC followed by CDA closes.
      expect_vec_near((g.b - g.a) + (g.c - g.b) + (g.d - g.c) + (g.a - g.d), Vec3::Zero(), 1e-10);
      expect_vec_near(g.path_abc.vertices().back(), g.path_cda.vertices().front(), 0.0);
      expect_vec_near(g.path_cda.vertices().back(), g.path_abc.vertices().front(), 0.0);
      // Enclosed area of the parallelogram.
      const Polyline loop({g.a, g.b, g.c, g.d}, true);
      EXPECT_NEAR(loop.areal_vector().norm(), g.area(), 1e-8);
    }
  }
}

TEST(DualArm, ArmUnitsOrthonormalOnGrid) {
  for (int i = 0; i < 10; ++i) {
    for (int j = 0; j < 10; ++j) {
      const double a = 2.0 * kPi * i / 10.0, b = 2.0 * kPi * j / 10.0;
      const Vec3 s = short_arm_unit(a, b), l = long_arm_unit(a, b);
      EXPECT_NEAR(s.norm(), 1.0, 1e-14);
      EXPECT_NEAR(l.norm(), 1.0, 1e-14);
      EXPECT_NEAR(s.dot(l), 0.0, 1e-14);
    }
  }
}

TEST(DualArm, RejectsBadArms) {
  EXPECT_THROW(make_dual_arm(0.0, 1.0, 0.0, 0.0), std::domain_error);
  EXPECT_THROW(make_dual_arm(1.0, -1.0, 0.0, 0.0), std::domain_error);
}

TEST(FiberLoop, EffectiveArea) {
  EXPECT_DOUBLE_EQ(fiber_loop_area(2000.0, 1.0), 1000.0);
  const double r = 0.25;
  EXPECT_NEAR(fiber_loop_area(2.0 * kPi * r, r), kPi * r * r, 1e-15);
  EXPECT_NEAR(fiber_loop_area(4.0 * kPi * r, r), 2.0 * kPi * r * r, 1e-15);
  EXPECT_THROW(fiber_loop_area(0.0, 1.0), std::domain_error);
  EXPECT_THROW(fiber_loop_area(1.0, 0.0), std::domain_error);
}
