#pragma once

#include <array>
#include <cmath>
#include <concepts>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "homgr/earth_model.hpp"
#include "homgr/geometry.hpp"
#include "homgr/relativity.hpp"
#include "homgr/vec.hpp"

namespace homgr {

/// Anything that supplies the time-time and time-space parts of a metric
/// perturbation at a local position.
template <class M>
concept MetricField = requires(const M& m, const Vec3& x) {
  { m.h00(x) } -> std::convertible_to<double>;
  { m.h0(x) } -> std::convertible_to<Vec3>;
  { m.light_speed() } -> std::convertible_to<double>;
};

enum class Direction { forward, reverse };

enum class Quadrature {
  /// Midpoint rule per straight segment; exact for metrics linear in position.
  segment_midpoint,
  /// Adaptive Gauss-Kronrod per segment, for metrics that are not linear.
  adaptive,
};

/// Time delay split by physical origin, seconds.
struct DelayBreakdown {
  double sagnac = 0.0;
  double geodetic = 0.0;
  double lense_thirring = 0.0;
  double gravitational = 0.0;
  double centrifugal = 0.0;

  double relativistic() const { return geodetic + lense_thirring; }
  double total() const { return sagnac + geodetic + lense_thirring + gravitational + centrifugal; }
};

struct EikonalResult {
  double phase_shift = 0.0; ///< rad
  double time_delay = 0.0;  ///< s, equal to -phase_shift / mean_frequency
  std::vector<double> per_segment; ///< rad, in traversal order
};

/// Reference optical angular frequency (800 nm) used where only delays matter.
inline constexpr double kReferenceAngularFrequency = 2.0 * kPi * kSpeedOfLight / 800e-9;

namespace detail {

/// Integrand of -1/2 dx^mu k^nu h_munu per unit arc length, divided by k^0,
/// along a null ray with spatial direction `t`: h_00 + 2 t.h_0.
template <MetricField M>
double null_contraction(const M& metric, const Vec3& x, const Vec3& t) {
  return metric.h00(x) + 2.0 * t.dot(metric.h0(x));
}

template <MetricField M>
double segment_integral(const M& metric, const Vec3& p, const Vec3& q, Quadrature rule) {
  const Vec3 delta = q - p;
  const double length = delta.norm();
  if (!(length > 0.0)) throw std::domain_error("phase_along_path: degenerate segment");
  const Vec3 t = delta / length;
  if (rule == Quadrature::segment_midpoint) return length * null_contraction(metric, 0.5 * (p + q), t);

  auto f = [&](double s) { return null_contraction(metric, p + s * delta, t); };
  double error = 0.0;
  const double unit = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(f, 0.0, 1.0, 15, 1e-14, &error);
  return length * unit;
}

} // namespace detail

/// Weak-field eikonal perturbation dS = -1/2 int dx^mu k^nu h_munu along `path`.
///
/// The ray is null at zeroth order, so dx^0 = |dx| and k^nu = k^0 (1, t) with t
/// the segment direction and k^0 = mean_frequency / c. A positive phase is an
/// advance; time_delay = -dS / mean_frequency.
template <MetricField M>
EikonalResult phase_along_path(const M& metric, const Polyline& path, double mean_frequency,
                               Direction direction = Direction::forward,
                               Quadrature rule = Quadrature::segment_midpoint) {
  if (!(mean_frequency > 0.0)) throw std::domain_error("phase_along_path: mean frequency must be positive");
  const Polyline route = direction == Direction::reverse ? path.reversed() : path;

  const double k0 = mean_frequency / metric.light_speed();
  EikonalResult out;
  out.per_segment.reserve(route.segment_count());
  for (std::size_t i = 0; i < route.segment_count(); ++i) {
    const auto [p, q] = route.segment(i);
    const double phase = -0.5 * k0 * detail::segment_integral(metric, p, q, rule);
    out.per_segment.push_back(phase);
    out.phase_shift += phase;
  }
  out.time_delay = -out.phase_shift / mean_frequency;
  return out;
}

/// Counter-propagation delay around a closed path: forward minus reverse.
/// For the proper-frame metric this is 4 omega'.A / c^2.
template <MetricField M>
double loop_delay(const M& metric, const Polyline& path, Quadrature rule = Quadrature::segment_midpoint) {
  if (!path.closed()) throw std::domain_error("loop_delay: path must be closed");
  const double nu = kReferenceAngularFrequency;
  return phase_along_path(metric, path, nu, Direction::forward, rule).time_delay -
         phase_along_path(metric, path, nu, Direction::reverse, rule).time_delay;
}

template <MetricField M>
double loop_delay(const M& metric, const CommonPathLoop& loop, Quadrature rule = Quadrature::segment_midpoint) {
  return loop_delay(metric, loop.path, rule);
}

/// Closed-form common-path delay: the Sagnac term (4 omega A / c^2) cos(theta - alpha)
/// and the geodetic and Lense-Thirring corrections, for a loop tilted by alpha
/// at colatitude theta.
inline DelayBreakdown sagnac_gr_delay(const EarthModel& m, double colatitude, double tilt, double area) {
  check_colatitude(colatitude, "sagnac_gr_delay");
  if (!(area > 0.0)) throw std::domain_error("sagnac_gr_delay: area must be positive");
  const double c2 = m.light_speed * m.light_speed;
  const double scale = 4.0 * m.spin_rate * area / c2;
  const double st = std::sin(colatitude), ct = std::cos(colatitude);
  const double sa = std::sin(tilt), ca = std::cos(tilt);
  const double rs_over_r = 2.0 * m.grav_const * m.mass / (c2 * m.radius);
  const double lt_coeff = m.grav_const * m.moment_of_inertia / (c2 * m.radius * m.radius * m.radius);

  DelayBreakdown out;
  out.sagnac = scale * std::cos(colatitude - tilt);
  out.geodetic = scale * rs_over_r * st * sa;
  out.lense_thirring = scale * lt_coeff * (2.0 * ct * ca - st * sa);
  return out;
}

/// Per-segment phases of both dual-arm paths, keyed "AB", "BC", "CD", "DA".
template <MetricField M>
std::map<std::string, double> dual_arm_segment_phases(const M& metric, const DualArmGeometry& geom,
                                                      double mean_frequency) {
  const auto abc = phase_along_path(metric, geom.path_abc, mean_frequency);
  const auto cda = phase_along_path(metric, geom.path_cda, mean_frequency);
  return {{"AB", abc.per_segment[0]},
          {"BC", abc.per_segment[1]},
          {"CD", cda.per_segment[0]},
          {"DA", cda.per_segment[1]}};
}

/// Delay of path ABC relative to path CDA from the eikonal integral.
template <MetricField M>
double dual_arm_path_delay(const M& metric, const DualArmGeometry& geom) {
  const double nu = kReferenceAngularFrequency;
  return phase_along_path(metric, geom.path_abc, nu).time_delay -
         phase_along_path(metric, geom.path_cda, nu).time_delay;
}

/// Closed-form dual-arm delay:
///   gravitational (g A / c^3) cos b (cos a - sin a)
///   centrifugal   (w^2 R A / c^3) sin t [sin t cos b (cos a - sin a) + cos t (cos a + sin a)]
inline DelayBreakdown dual_arm_delay(const EarthModel& m, double colatitude, double alpha, double beta,
                                     double long_arm, double short_arm) {
  check_colatitude(colatitude, "dual_arm_delay");
  if (!(long_arm > 0.0) || !(short_arm > 0.0)) throw std::domain_error("dual_arm_delay: arms must be positive");
  const double c3 = m.light_speed * m.light_speed * m.light_speed;
  const double area = long_arm * short_arm;
  const double st = std::sin(colatitude), ct = std::cos(colatitude);
  const double sa = std::sin(alpha), ca = std::cos(alpha);
  const double cb = std::cos(beta);

  DelayBreakdown out;
  out.gravitational = m.surface_gravity * area / c3 * cb * (ca - sa);
  out.centrifugal = m.centrifugal_magnitude() * area / c3 * st * (st * cb * (ca - sa) + ct * (ca + sa));
  return out;
}

/// Same split as dual_arm_delay, computed by integrating each acceleration
/// separately along both paths.
inline DelayBreakdown dual_arm_delay_numeric(const EarthModel& m, double colatitude, double alpha, double beta,
                                             double long_arm, double short_arm) {
  const DualArmGeometry geom = make_dual_arm(long_arm, short_arm, alpha, beta);
  const MetricPerturbation gravity(gravitational_acceleration(m), Vec3::Zero(), m.light_speed);
  const MetricPerturbation centrifugal(centrifugal_acceleration(m, colatitude), Vec3::Zero(), m.light_speed);
  DelayBreakdown out;
  out.gravitational = dual_arm_path_delay(gravity, geom);
  out.centrifugal = dual_arm_path_delay(centrifugal, geom);
  return out;
}

/// Delay span per unit area, s/km^2.
inline double figure_of_merit(double delay_max, double delay_min, double area_m2) {
  if (!(area_m2 > 0.0)) throw std::domain_error("figure_of_merit: area must be positive");
  return (delay_max - delay_min) / (area_m2 * 1e-6);
}

} // namespace homgr
