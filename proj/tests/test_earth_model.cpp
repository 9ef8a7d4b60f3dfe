#include <gtest/gtest.h>

#include "homgr/earth_model.hpp"

using namespace homgr;

TEST(EarthModel, DefaultConstants) {
  const EarthModel m = default_earth();
  EXPECT_DOUBLE_EQ(m.surface_gravity, 9.8);
  EXPECT_TRUE(check_invariants(m).empty());
  EXPECT_NO_THROW(validate(m));
  // omega^2 R ~ 3.4e-2 m/s^2
  EXPECT_NEAR(m.centrifugal_magnitude(), 3.4e-2, 0.05e-2);
  // 2GM/(c^2 R) ~ 1.39e-9
  EXPECT_NEAR(m.schwarzschild_radius() / m.radius, 1.39e-9, 0.01e-9);
  EXPECT_DOUBLE_EQ(m.moment_of_inertia, 0.3307 * m.mass * m.radius * m.radius);
}

TEST(EarthModel, InvariantViolationsAreListed) {
  EarthModel m = default_earth();
  m.mass = -1.0;
  m.spin_rate = 0.0;
  const auto issues = check_invariants(m);
  ASSERT_EQ(issues.size(), 2u);
  EXPECT_THROW(validate(m), std::domain_error);

  EarthModel dense = default_earth();
  dense.mass = 1e33; // neutron-star-ish compactness at Earth radius
  dense.moment_of_inertia = 0.3 * dense.mass * dense.radius * dense.radius;
  EXPECT_FALSE(check_invariants(dense).empty());

  EarthModel spun = default_earth();
  spun.moment_of_inertia = 0.5 * spun.mass * spun.radius * spun.radius;
  EXPECT_FALSE(check_invariants(spun).empty());
}

TEST(EarthModel, NewtonianPotential) {
  const EarthModel m = default_earth();
  const double u = newtonian_potential(m, m.radius);
  EXPECT_NEAR(u, 6.26e7, 0.01e7);
  EXPECT_DOUBLE_EQ(newtonian_potential(m, 2.0 * m.radius), u / 2.0);
  EXPECT_NEAR(newtonian_potential_over_c2(m, m.radius), 6.96e-10, 0.01e-10);
  EXPECT_THROW(newtonian_potential(m, 0.0), std::domain_error);
  EXPECT_THROW(newtonian_potential(m, -1.0), std::domain_error);
}

TEST(EarthModel, PotentialTimesRadiusIsConstant) {
  const EarthModel m = default_earth();
  const double ref = newtonian_potential(m, m.radius) * m.radius;
  for (int i = 0; i <= 100; ++i) {
    const double r = m.radius * (1.0 + 9.0 * i / 100.0);
    EXPECT_NEAR(newtonian_potential(m, r) * r / ref, 1.0, 1e-12);
  }
}

TEST(EarthModel, GravitomagneticPotential) {
  const EarthModel m = default_earth();
  const Vec3 polar(0.0, 0.0, m.radius);
  EXPECT_EQ(gravitomagnetic_potential(m, polar), Vec3::Zero());

  const Vec3 eq(m.radius, 0.0, 0.0);
  const double expected = m.grav_const * m.moment_of_inertia * m.spin_rate /
                          (2.0 * m.light_speed * m.radius * m.radius);
  EXPECT_NEAR(gravitomagnetic_potential(m, eq).norm() / expected, 1.0, 1e-14);

  const Vec3 r(1.2e6, -3.4e6, 5.0e6);
  const Vec3 v1 = gravitomagnetic_potential(m, r);
  const Vec3 v2 = gravitomagnetic_potential(m, 2.0 * r);
  EXPECT_LT((v2 - v1 / 4.0).norm(), 1e-14 * v1.norm());
  EXPECT_THROW(gravitomagnetic_potential(m, Vec3::Zero()), std::domain_error);
}

TEST(EarthModel, GravitomagneticPotentialIsOrthogonal) {
  const EarthModel m = default_earth();
  for (int i = 0; i < 50; ++i) {
    const double th = 0.07 * i, ph = 0.31 * i;
    const double r = m.radius * (1.0 + 0.1 * i);
    const Vec3 pos = r * Vec3(std::sin(th) * std::cos(ph), std::sin(th) * std::sin(ph), std::cos(th));
    const Vec3 v = gravitomagnetic_potential(m, pos);
    EXPECT_LE(std::abs(v.dot(m.spin_vector())), 1e-12 * v.norm() * m.spin_rate + 1e-300);
    EXPECT_LE(std::abs(v.dot(pos)), 1e-12 * v.norm() * pos.norm() + 1e-300);
  }
}
