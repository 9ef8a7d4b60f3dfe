#pragma once

#include <cmath>
#include <stdexcept>

#include "homgr/earth_model.hpp"
#include "homgr/vec.hpp"

namespace homgr {

// Observer frame conventions
// --------------------------
// The observer sits on the surface at colatitude theta (polar angle from the
// spin axis, NOT geodetic latitude) and longitude 0. Its rigid spatial triad is
//
//   x = e_phi      (east)
//   y = -e_theta   (north, toward the pole of the hemisphere's spin axis)
//   z = e_r        (up)
//
// In this triad the spin vector is omega (cos theta z + sin theta y), an
// interferometer tilted by alpha from the vertical has areal direction
// cos alpha z + sin alpha y, and the outward centrifugal acceleration is
// omega^2 R sin theta (sin theta z - cos theta y).

inline void check_colatitude(double colatitude, const char* where) {
  if (!(colatitude >= 0.0 && colatitude <= kPi))
    throw std::domain_error(std::string(where) + ": colatitude must lie in [0, pi]");
}

/// Rows are the local (east, north, up) axes expressed in the body-centred frame.
inline Mat3 local_triad(double colatitude) {
  check_colatitude(colatitude, "local_triad");
  const double s = std::sin(colatitude);
  const double c = std::cos(colatitude);
  Mat3 t;
  t << 0.0, 1.0, 0.0, //
      -c, 0.0, s,     //
      s, 0.0, c;
  return t;
}

/// Observer position in the body-centred frame.
inline Vec3 observer_position(const EarthModel& m, double colatitude) {
  return m.radius * Vec3(std::sin(colatitude), 0.0, std::cos(colatitude));
}

/// Measured-rotation terms of the surface observer, local triad, rad/s.
struct RotationDecomposition {
  Vec3 earth_spin = Vec3::Zero();
  Vec3 thomas = Vec3::Zero();
  Vec3 geodetic = Vec3::Zero();
  Vec3 lense_thirring = Vec3::Zero();
  Vec3 total = Vec3::Zero();

  Vec3 relativistic() const { return geodetic + lense_thirring; }
};

/// Uniform-field part of the measured acceleration, g along +z.
inline Vec3 gravitational_acceleration(const EarthModel& m) { return {0.0, 0.0, m.surface_gravity}; }

/// Centrifugal part omega^2 R sin(theta) (sin theta z - cos theta y).
inline Vec3 centrifugal_acceleration(const EarthModel& m, double colatitude) {
  check_colatitude(colatitude, "centrifugal_acceleration");
  const double s = std::sin(colatitude);
  const double c = std::cos(colatitude);
  return m.centrifugal_magnitude() * s * Vec3(0.0, -c, s);
}

/// Measured acceleration gamma = a - grad U in the local triad.
inline Vec3 proper_acceleration(const EarthModel& m, double colatitude) {
  check_colatitude(colatitude, "proper_acceleration");
  return gravitational_acceleration(m) + centrifugal_acceleration(m, colatitude);
}

/// Measured rotation omega' with its four named terms.
///
/// earth_spin     = omega (1 + v^2/2c^2 + U/c^2)
/// thomas         = 1/2 v x (-grad U) / c^2     (the centrifugal v x a piece is dropped)
/// geodetic       = -3/2 v x grad U / c^2
/// lense_thirring = -2 curl V / c
/// with v = omega x R evaluated at the observer.
inline RotationDecomposition proper_rotation_rate(const EarthModel& m, double colatitude) {
  check_colatitude(colatitude, "proper_rotation_rate");
  const double c2 = m.light_speed * m.light_speed;
  const Vec3 pos = observer_position(m, colatitude);
  const Vec3 omega = m.spin_vector();
  const Vec3 v = omega.cross(pos);
  const Vec3 grad_u = newtonian_potential_gradient(m, pos);
  const double u_over_c2 = newtonian_potential_over_c2(m, pos.norm());

  const Mat3 to_local = local_triad(colatitude);
  RotationDecomposition r;
  r.earth_spin = to_local * (omega * (1.0 + 0.5 * v.squaredNorm() / c2 + u_over_c2));
  r.thomas = to_local * (0.5 * v.cross(-grad_u) / c2);
  r.geodetic = to_local * (-1.5 * v.cross(grad_u) / c2);
  r.lense_thirring = to_local * (-2.0 * gravitomagnetic_curl(m, pos) / m.light_speed);
  r.total = r.earth_spin + r.thomas + r.geodetic + r.lense_thirring;
  return r;
}

/// Observer frame: colatitude, measured acceleration and rotation.
struct LocalFrame {
  double colatitude = 0.0;
  Vec3 accel = Vec3::Zero();
  RotationDecomposition rotation;
  EarthModel model;
};

inline LocalFrame make_frame(const EarthModel& m, double colatitude) {
  validate(m);
  LocalFrame f;
  f.colatitude = colatitude;
  f.accel = proper_acceleration(m, colatitude);
  f.rotation = proper_rotation_rate(m, colatitude);
  f.model = m;
  return f;
}

/// First-order proper-frame metric perturbation
///
///   h_00 = -2 gamma.x / c^2,   h_0i = (omega' x x)_i / c,   h_ij = 0.
///
/// Any type with the same h00 / h0 / light_speed members can stand in for it
/// in the eikonal integrator.
class MetricPerturbation {
public:
  MetricPerturbation(const Vec3& accel, const Vec3& rotation, double light_speed = kSpeedOfLight)
      : accel_(accel), rotation_(rotation), light_speed_(light_speed) {
    if (!(light_speed > 0.0)) throw std::domain_error("MetricPerturbation: light speed must be positive");
  }

  const Vec3& accel() const { return accel_; }
  const Vec3& rotation() const { return rotation_; }
  double light_speed() const { return light_speed_; }

  double h00(const Vec3& x) const { return -2.0 * accel_.dot(x) / (light_speed_ * light_speed_); }
  Vec3 h0(const Vec3& x) const { return rotation_.cross(x) / light_speed_; }

  /// Full symmetric 4x4 h_(mu)(nu) at a local position.
  Mat4 components(const Vec3& x) const {
    Mat4 h = Mat4::Zero();
    h(0, 0) = h00(x);
    const Vec3 h0i = h0(x);
    for (int i = 0; i < 3; ++i) {
      h(0, i + 1) = h0i[i];
      h(i + 1, 0) = h0i[i];
    }
    return h;
  }

private:
  Vec3 accel_;
  Vec3 rotation_;
  double light_speed_;
};

inline MetricPerturbation local_metric(const LocalFrame& frame) {
  return MetricPerturbation(frame.accel, frame.rotation.total, frame.model.light_speed);
}

} // namespace homgr
