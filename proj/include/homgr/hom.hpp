#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "homgr/vec.hpp"

namespace homgr {

// Spectral-width convention: sigma is the standard deviation of the Gaussian
// spectral AMPLITUDE, f(nu) ~ exp(-(nu - nu0)^2 / (2 sigma^2)); the intensity
// |f|^2 then has standard deviation sigma / sqrt(2). This is the convention in
// which identical Gaussian photons give p_c = 1/2 [1 - exp(-dt^2 sigma^2 / 2)].

/// Single-photon spectral amplitude on a uniform angular-frequency grid.
/// Must be normalised: sum |f|^2 dnu = 1 to relative 1e-8.
class SpectralAmplitude {
public:
  SpectralAmplitude(double first_frequency, double spacing, std::vector<std::complex<double>> amplitudes)
      : first_(first_frequency), spacing_(spacing), amplitudes_(std::move(amplitudes)) {
    if (!(spacing_ > 0.0)) throw std::domain_error("SpectralAmplitude: grid spacing must be positive");
    if (amplitudes_.size() < 2) throw std::domain_error("SpectralAmplitude: need at least two grid points");
    if (std::abs(norm() - 1.0) > 1e-8) throw std::domain_error("SpectralAmplitude: amplitude is not normalised");
  }

  double first_frequency() const { return first_; }
  double spacing() const { return spacing_; }
  std::size_t size() const { return amplitudes_.size(); }
  double frequency(std::size_t i) const { return first_ + spacing_ * static_cast<double>(i); }
  const std::vector<std::complex<double>>& amplitudes() const { return amplitudes_; }

  double norm() const {
    double s = 0.0;
    for (const auto& a : amplitudes_) s += std::norm(a);
    return s * spacing_;
  }

  bool same_grid(const SpectralAmplitude& other) const {
    if (size() != other.size()) return false;
    const double tol = 1e-12 * std::max(std::abs(first_), spacing_ * size());
    return std::abs(first_ - other.first_) <= tol && std::abs(spacing_ - other.spacing_) <= 1e-12 * spacing_;
  }

private:
  double first_;
  double spacing_;
  std::vector<std::complex<double>> amplitudes_;
};

inline constexpr std::size_t kDefaultSpectralPoints = 4096;
inline constexpr double kDefaultSpectralHalfWidth = 8.0; ///< in units of sigma

/// Gaussian amplitude centred on `center` with amplitude width `sigma`, sampled
/// on points covering center +/- half_width_sigmas * sigma.
inline SpectralAmplitude gaussian_wavepacket(double center, double sigma,
                                             std::size_t points = kDefaultSpectralPoints,
                                             double half_width_sigmas = kDefaultSpectralHalfWidth) {
  if (!(sigma > 0.0)) throw std::domain_error("gaussian_wavepacket: sigma must be positive");
  if (points < 3) throw std::domain_error("gaussian_wavepacket: need at least three points");
  const double lo = center - half_width_sigmas * sigma;
  const double spacing = 2.0 * half_width_sigmas * sigma / static_cast<double>(points - 1);
  std::vector<std::complex<double>> amp(points);
  double norm = 0.0;
  for (std::size_t i = 0; i < points; ++i) {
    const double x = (lo + spacing * static_cast<double>(i) - center) / sigma;
    amp[i] = std::exp(-0.5 * x * x);
    norm += std::norm(amp[i]);
  }
  const double scale = 1.0 / std::sqrt(norm * spacing);
  for (auto& a : amp) a *= scale;
  return SpectralAmplitude(lo, spacing, std::move(amp));
}

inline void check_visibility(double visibility, const char* where) {
  if (!(visibility >= 0.0 && visibility <= 1.0))
    throw std::domain_error(std::string(where) + ": visibility must lie in [0, 1]");
}

/// p_c = 1/2 [1 - V exp(-dt^2 sigma^2 / 2)].
inline double coincidence_ideal(double delay, double spectral_width, double visibility = 1.0) {
  if (!(spectral_width > 0.0)) throw std::domain_error("coincidence_ideal: spectral width must be positive");
  check_visibility(visibility, "coincidence_ideal");
  return 0.5 * (1.0 - visibility * std::exp(-0.5 * delay * delay * spectral_width * spectral_width));
}

/// Spectral overlap sum f*(nu) g(nu) exp(-i nu dt) dnu. The common carrier
/// phase is factored out, which leaves the modulus unchanged.
inline std::complex<double> delayed_overlap(const SpectralAmplitude& f, const SpectralAmplitude& g, double delay) {
  if (!f.same_grid(g)) throw std::domain_error("coincidence_overlap: spectral grids differ");
  std::complex<double> sum = 0.0;
  const auto& fa = f.amplitudes();
  const auto& ga = g.amplitudes();
  for (std::size_t i = 0; i < fa.size(); ++i) {
    const double offset = f.spacing() * static_cast<double>(i);
    sum += std::conj(fa[i]) * ga[i] * std::polar(1.0, -offset * delay);
  }
  return sum * f.spacing();
}

/// Coincidence probability after a 50/50 beamsplitter for independent single
/// photons in f (delayed by dt) and g: p_c = 1/2 [1 - |<f_dt|g>|^2].
inline double coincidence_overlap(const SpectralAmplitude& f, const SpectralAmplitude& g, double delay) {
  return 0.5 * (1.0 - std::norm(delayed_overlap(f, g, delay)));
}

/// Relative-delay noise: Gaussian with mean `mean_shift` and std `jitter_sigma`.
struct JitterModel {
  double mean_shift = 0.0;
  double jitter_sigma = 0.0;
  std::uint64_t seed = 0;
};

enum class JitterMode { analytic, montecarlo };

struct JitterPoint {
  double probability = 0.0;
  double standard_error = 0.0; ///< zero in analytic mode
};

/// Coincidence probability averaged over the jittered delay.
///
/// Analytic mode uses the exact Gaussian average
///   1/2 [1 - V' exp(-dt^2 s'^2 / 2)],  s'^2 = s^2 / (1 + s^2 j^2),  V' = V / sqrt(1 + s^2 j^2).
/// Monte-Carlo mode samples delays from a generator seeded by model.seed.
inline JitterPoint dip_with_jitter(const JitterModel& model, double spectral_width, double visibility,
                                   JitterMode mode = JitterMode::analytic, std::size_t samples = 0) {
  if (!(model.jitter_sigma >= 0.0)) throw std::domain_error("dip_with_jitter: jitter sigma must be non-negative");
  if (!(spectral_width > 0.0)) throw std::domain_error("dip_with_jitter: spectral width must be positive");
  check_visibility(visibility, "dip_with_jitter");

  if (mode == JitterMode::analytic) {
    const double spread = 1.0 + spectral_width * spectral_width * model.jitter_sigma * model.jitter_sigma;
    const double width = spectral_width / std::sqrt(spread);
    return {coincidence_ideal(model.mean_shift, width, visibility / std::sqrt(spread)), 0.0};
  }

  if (samples < 1) throw std::domain_error("dip_with_jitter: Monte-Carlo needs at least one sample");
  std::mt19937_64 rng(model.seed);
  std::normal_distribution<double> noise(0.0, 1.0);
  double mean = 0.0, m2 = 0.0;
  for (std::size_t i = 0; i < samples; ++i) {
    const double dt = model.mean_shift + model.jitter_sigma * noise(rng);
    const double p = coincidence_ideal(dt, spectral_width, visibility);
    // Welford
    const double d = p - mean;
    mean += d / static_cast<double>(i + 1);
    m2 += d * (p - mean);
  }
  const double var = samples > 1 ? m2 / static_cast<double>(samples - 1) : 0.0;
  return {mean, std::sqrt(var / static_cast<double>(samples))};
}

/// Visibility (p_max - p_min) / p_max. Recovers V from the noisy dip form.
inline double visibility_from_extremes(double p_max, double p_min) {
  if (!(p_max > 0.0)) throw std::domain_error("visibility_from_extremes: p_max must be positive");
  if (!(p_min >= 0.0 && p_min <= p_max && p_max <= 0.5 + 1e-12))
    throw std::domain_error("visibility_from_extremes: need 0 <= p_min <= p_max <= 1/2");
  return (p_max - p_min) / p_max;
}

/// Visibility with p_min in the denominator. It is not
/// consistent with the noisy dip form (an ideal dip gives infinity).
inline double visibility_over_minimum(double p_max, double p_min) {
  if (!(p_min > 0.0)) throw std::domain_error("visibility_over_minimum: p_min must be positive");
  if (!(p_min <= p_max && p_max <= 0.5 + 1e-12))
    throw std::domain_error("visibility_over_minimum: need 0 < p_min <= p_max <= 1/2");
  return (p_max - p_min) / p_min;
}

/// A relativistic shift is resolvable only when it exceeds the delay jitter.
inline bool is_resolvable(double shift, double jitter_sigma) { return std::abs(shift) > jitter_sigma; }

struct DipCurve {
  std::vector<double> delays;
  std::vector<double> probabilities;
  double visibility = 1.0;
  double spectral_width = 0.0;
  std::size_t argmin = 0;

  double minimum_delay() const { return delays.at(argmin); }
};

/// Samples the ideal dip on a symmetric scan window [-w, w], shifted so the
/// minimum sits at scan delay `delay_center`.
inline DipCurve dip_curve(double delay_center, double spectral_width, double visibility, double window_halfwidth,
                          std::size_t points) {
  if (points < 3 || points % 2 == 0) throw std::domain_error("dip_curve: points must be odd and >= 3");
  if (!(window_halfwidth > 0.0)) throw std::domain_error("dip_curve: window half-width must be positive");
  DipCurve curve;
  curve.visibility = visibility;
  curve.spectral_width = spectral_width;
  curve.delays.resize(points);
  curve.probabilities.resize(points);
  const double step = 2.0 * window_halfwidth / static_cast<double>(points - 1);
  const auto half = static_cast<std::ptrdiff_t>(points / 2);
  for (std::size_t i = 0; i < points; ++i) {
    const double scan = step * static_cast<double>(static_cast<std::ptrdiff_t>(i) - half);
    curve.delays[i] = scan;
    curve.probabilities[i] = coincidence_ideal(scan - delay_center, spectral_width, visibility);
    if (curve.probabilities[i] < curve.probabilities[curve.argmin]) curve.argmin = i;
  }
  return curve;
}

} // namespace homgr
