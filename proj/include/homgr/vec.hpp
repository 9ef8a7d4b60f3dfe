#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace homgr {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Mat4 = Eigen::Matrix4d;

/// Vacuum speed of light, m/s (exact SI value).
inline constexpr double kSpeedOfLight = 2.99792458e8;

inline constexpr double kPi = 3.14159265358979323846;

inline constexpr double deg_to_rad(double deg) { return deg * kPi / 180.0; }
inline constexpr double rad_to_deg(double rad) { return rad * 180.0 / kPi; }

} // namespace homgr
