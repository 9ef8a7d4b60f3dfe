#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "homgr/vec.hpp"

namespace homgr {

/// Physical constants of a rigidly rotating spherical mass, SI units.
///
/// Positions passed to the potential functions are in the body-centred frame
/// whose z axis is the spin axis.
struct EarthModel {
  double grav_const = 0.0;        ///< m^3 kg^-1 s^-2
  double mass = 0.0;              ///< kg
  double radius = 0.0;            ///< m
  double moment_of_inertia = 0.0; ///< kg m^2
  double spin_rate = 0.0;         ///< rad/s, along +z
  double surface_gravity = 0.0;   ///< m/s^2
  double light_speed = kSpeedOfLight;

  double schwarzschild_radius() const { return 2.0 * grav_const * mass / (light_speed * light_speed); }

  /// Newtonian surface field GM/R^2. Distinct from surface_gravity, which is
  /// the nominal measured g used for the uniform-field delay terms.
  double newtonian_surface_field() const { return grav_const * mass / (radius * radius); }

  double centrifugal_magnitude() const { return spin_rate * spin_rate * radius; }

  Vec3 spin_vector() const { return {0.0, 0.0, spin_rate}; }
  Vec3 angular_momentum() const { return moment_of_inertia * spin_vector(); }
};

/// Returns every violated invariant; empty means the model is usable.
inline std::vector<std::string> check_invariants(const EarthModel& m) {
  std::vector<std::string> issues;
  auto positive = [&](double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) issues.push_back(std::string(name) + " must be positive and finite");
  };
  positive(m.grav_const, "grav_const");
  positive(m.mass, "mass");
  positive(m.radius, "radius");
  positive(m.moment_of_inertia, "moment_of_inertia");
  positive(m.spin_rate, "spin_rate");
  positive(m.surface_gravity, "surface_gravity");
  positive(m.light_speed, "light_speed");
  if (!issues.empty()) return issues;

  if (!(m.schwarzschild_radius() / m.radius < 1e-6))
    issues.emplace_back("mass: Schwarzschild radius / radius must be < 1e-6 (weak field)");
  if (!(m.moment_of_inertia < 0.4 * m.mass * m.radius * m.radius * 1.01))
    issues.emplace_back("moment_of_inertia: exceeds the uniform solid-sphere bound 2/5 M R^2");
  return issues;
}

inline void validate(const EarthModel& m) {
  const auto issues = check_invariants(m);
  if (issues.empty()) return;
  std::string msg = "invalid EarthModel:";
  for (const auto& s : issues) msg += " " + s + ";";
  throw std::domain_error(msg);
}

inline EarthModel default_earth() {
  EarthModel m;
  m.grav_const = 6.674e-11;
  m.mass = 5.972e24;
  m.radius = 6.371e6;
  m.spin_rate = 7.2921e-5;
  m.surface_gravity = 9.8;
  m.light_speed = kSpeedOfLight;
  // Standard geophysical value; the uniform sphere would be 0.4.
  m.moment_of_inertia = 0.3307 * m.mass * m.radius * m.radius;
  return m;
}

/// U = GM/r in m^2/s^2.
inline double newtonian_potential(const EarthModel& m, double r) {
  if (!(r > 0.0)) throw std::domain_error("newtonian_potential: r must be positive");
  return m.grav_const * m.mass / r;
}

/// Dimensionless U/c^2.
inline double newtonian_potential_over_c2(const EarthModel& m, double r) {
  return newtonian_potential(m, r) / (m.light_speed * m.light_speed);
}

/// grad U at a body-centred position; points toward the centre.
inline Vec3 newtonian_potential_gradient(const EarthModel& m, const Vec3& position) {
  const double r = position.norm();
  if (!(r > 0.0)) throw std::domain_error("newtonian_potential_gradient: zero position");
  return -m.grav_const * m.mass / (r * r * r) * position;
}

/// Gravitomagnetic potential G (J x r) / (2 c r^3), in m^2/s^2.
///
/// With this normalisation the PN off-diagonal metric term is g_0i = -4 V_i / c^2.
inline Vec3 gravitomagnetic_potential(const EarthModel& m, const Vec3& position) {
  const double r = position.norm();
  if (!(r > 0.0)) throw std::domain_error("gravitomagnetic_potential: zero position");
  const double scale = m.grav_const / (2.0 * m.light_speed * r * r * r);
  return scale * m.angular_momentum().cross(position);
}

/// Analytic curl of gravitomagnetic_potential: G [3 (J.r^) r^ - J] / (2 c r^3).
inline Vec3 gravitomagnetic_curl(const EarthModel& m, const Vec3& position) {
  const double r = position.norm();
  if (!(r > 0.0)) throw std::domain_error("gravitomagnetic_curl: zero position");
  const Vec3 rhat = position / r;
  const Vec3 J = m.angular_momentum();
  const double scale = m.grav_const / (2.0 * m.light_speed * r * r * r);
  return scale * (3.0 * J.dot(rhat) * rhat - J);
}

} // namespace homgr
