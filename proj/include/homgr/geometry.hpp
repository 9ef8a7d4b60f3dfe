#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "homgr/vec.hpp"

namespace homgr {

/// Paths must stay well inside the region where the linear proper-frame
/// metric holds (size << c^2/g).
inline constexpr double kMaxLocalExtent = 1e5;

/// Ordered vertices in the local frame, metres. A closed polyline has an
/// implicit last segment back to the first vertex.
class Polyline {
public:
  Polyline(std::vector<Vec3> vertices, bool closed) : vertices_(std::move(vertices)), closed_(closed) {
    const std::size_t min_vertices = closed_ ? 3 : 2;
    if (vertices_.size() < min_vertices)
      throw std::domain_error("Polyline: needs at least " + std::to_string(min_vertices) + " vertices");
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      if (!vertices_[i].allFinite()) throw std::domain_error("Polyline: non-finite vertex");
      if (vertices_[i].norm() >= kMaxLocalExtent)
        throw std::domain_error("Polyline: vertex outside the local-frame validity region");
    }
    for (std::size_t i = 0; i < segment_count(); ++i) {
      const auto [p, q] = segment(i);
      if (p == q) throw std::domain_error("Polyline: degenerate segment " + std::to_string(i));
    }
  }

  const std::vector<Vec3>& vertices() const { return vertices_; }
  bool closed() const { return closed_; }

  std::size_t segment_count() const { return closed_ ? vertices_.size() : vertices_.size() - 1; }

  std::pair<Vec3, Vec3> segment(std::size_t i) const {
    return {vertices_[i], vertices_[(i + 1) % vertices_.size()]};
  }

  double length() const {
    double total = 0.0;
    for (std::size_t i = 0; i < segment_count(); ++i) {
      const auto [p, q] = segment(i);
      total += (q - p).norm();
    }
    return total;
  }

  /// Shoelace areal vector 1/2 sum x_k x x_{k+1}; closed paths only.
  Vec3 areal_vector() const {
    if (!closed_) throw std::domain_error("Polyline::areal_vector: path is open");
    Vec3 sum = Vec3::Zero();
    for (std::size_t i = 0; i < segment_count(); ++i) {
      const auto [p, q] = segment(i);
      sum += p.cross(q);
    }
    return 0.5 * sum;
  }

  Polyline reversed() const {
    std::vector<Vec3> v(vertices_.rbegin(), vertices_.rend());
    return Polyline(std::move(v), closed_);
  }

  /// Cyclic relabelling of the start vertex (closed paths).
  Polyline rotated(std::size_t shift) const {
    std::vector<Vec3> v = vertices_;
    std::rotate(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(shift % v.size()), v.end());
    return Polyline(std::move(v), closed_);
  }

private:
  std::vector<Vec3> vertices_;
  bool closed_;
};

/// Unit normal of a loop tilted by `tilt` from the local vertical toward north.
inline Vec3 loop_normal(double tilt) { return {0.0, std::sin(tilt), std::cos(tilt)}; }

/// Regular polygon centred on the origin, counter-clockwise about `normal`.
inline Polyline regular_polygon(double circumradius, const Vec3& normal, int segments) {
  if (!(circumradius > 0.0)) throw std::domain_error("regular_polygon: radius must be positive");
  if (segments < 3) throw std::domain_error("regular_polygon: need at least 3 segments");
  const Vec3 n = normal.normalized();
  // Any unit vector orthogonal to n; prefer east so tilted loops keep a stable basis.
  Vec3 u = Vec3::UnitX() - n.x() * n;
  if (u.norm() < 1e-8) u = Vec3::UnitY() - n.y() * n;
  u.normalize();
  const Vec3 w = n.cross(u);

  std::vector<Vec3> vertices;
  vertices.reserve(static_cast<std::size_t>(segments));
  for (int k = 0; k < segments; ++k) {
    const double phi = 2.0 * kPi * k / segments;
    vertices.push_back(circumradius * (std::cos(phi) * u + std::sin(phi) * w));
  }
  return Polyline(std::move(vertices), true);
}

/// Common-path loop of area `area` whose areal vector is tilted by `tilt`.
struct CommonPathLoop {
  double area = 0.0;
  double tilt = 0.0;
  Polyline path;
  Vec3 areal_vector;
};

inline constexpr int kDefaultLoopSegments = 64;

/// Regular polygon scaled so its enclosed area equals `area` exactly.
inline CommonPathLoop make_loop(double area, double tilt, int segments = kDefaultLoopSegments) {
  if (!(area > 0.0)) throw std::domain_error("make_loop: area must be positive");
  if (segments < 3) throw std::domain_error("make_loop: need at least 3 segments");
  const double n = segments;
  const double circumradius = std::sqrt(2.0 * area / (n * std::sin(2.0 * kPi / n)));
  const Vec3 normal = loop_normal(tilt);
  return CommonPathLoop{area, tilt, regular_polygon(circumradius, normal, segments), area * normal};
}

/// Dual-arm (parallelogram) interferometer with corners A (origin), B, C, D.
///
/// Arm directions, components in (east, north, up):
///   short arm  n_BA = n_CD = (sin a sin b,  cos a, sin a cos b)
///   long arm   n_DA = n_CB = (cos a sin b, -sin a, cos a cos b)
/// B = d n_BA, D = l n_DA, C = B + l n_DA. Path 1 is A->B->C, path 2 is C->D->A;
/// the reported delay is path 1 minus path 2, which carries the gravitational
/// sign (g A / c^3) cos b (cos a - sin a).
struct DualArmGeometry {
  double long_arm = 0.0;
  double short_arm = 0.0;
  double tilt_alpha = 0.0;
  double tilt_beta = 0.0;
  Vec3 short_unit;
  Vec3 long_unit;
  Vec3 a, b, c, d;
  Polyline path_abc;
  Polyline path_cda;

  double area() const { return long_arm * short_arm; }
};

inline Vec3 short_arm_unit(double alpha, double beta) {
  return {std::sin(alpha) * std::sin(beta), std::cos(alpha), std::sin(alpha) * std::cos(beta)};
}

inline Vec3 long_arm_unit(double alpha, double beta) {
  return {std::cos(alpha) * std::sin(beta), -std::sin(alpha), std::cos(alpha) * std::cos(beta)};
}

inline DualArmGeometry make_dual_arm(double long_arm, double short_arm, double alpha, double beta) {
  if (!(long_arm > 0.0) || !(short_arm > 0.0)) throw std::domain_error("make_dual_arm: arms must be positive");
  const Vec3 ns = short_arm_unit(alpha, beta);
  const Vec3 nl = long_arm_unit(alpha, beta);
  const Vec3 a = Vec3::Zero();
  const Vec3 b = short_arm * ns;
  const Vec3 d = long_arm * nl;
  const Vec3 c = b + long_arm * nl;
  return DualArmGeometry{long_arm, short_arm, alpha, beta, ns, nl, a, b, c, d,
                         Polyline({a, b, c}, false), Polyline({c, d, a}, false)};
}

/// Effective area l r / 2 of a fibre coil of length l wound at radius r.
inline double fiber_loop_area(double fiber_length, double loop_radius) {
  if (!(fiber_length > 0.0) || !(loop_radius > 0.0))
    throw std::domain_error("fiber_loop_area: length and radius must be positive");
  return 0.5 * fiber_length * loop_radius;
}

} // namespace homgr
