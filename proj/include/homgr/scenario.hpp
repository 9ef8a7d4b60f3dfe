#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "homgr/earth_model.hpp"
#include "homgr/eikonal.hpp"
#include "homgr/geometry.hpp"
#include "homgr/hom.hpp"
#include "homgr/relativity.hpp"

namespace homgr {

enum class ScenarioKind { common_path, dual_arm };

/// Quantities a sweep may vary. Angles are swept in degrees.
enum class SweepVariable { colatitude_deg, latitude_deg, alpha_deg, beta_deg, area_m2, long_arm_m, short_arm_m };

inline const char* to_string(SweepVariable v) {
  switch (v) {
  case SweepVariable::colatitude_deg: return "colatitude_deg";
  case SweepVariable::latitude_deg: return "latitude_deg";
  case SweepVariable::alpha_deg: return "alpha_deg";
  case SweepVariable::beta_deg: return "beta_deg";
  case SweepVariable::area_m2: return "area_m2";
  case SweepVariable::long_arm_m: return "long_arm_m";
  case SweepVariable::short_arm_m: return "short_arm_m";
  }
  return "?";
}

inline std::optional<SweepVariable> parse_sweep_variable(const std::string& s) {
  for (auto v : {SweepVariable::colatitude_deg, SweepVariable::latitude_deg, SweepVariable::alpha_deg,
                 SweepVariable::beta_deg, SweepVariable::area_m2, SweepVariable::long_arm_m,
                 SweepVariable::short_arm_m})
    if (s == to_string(v)) return v;
  return std::nullopt;
}

struct SweepSpec {
  SweepVariable variable = SweepVariable::alpha_deg;
  double start = 0.0;
  double stop = 0.0;
  int steps = 1;

  double value(int i) const {
    if (steps <= 1) return start;
    return start + (stop - start) * static_cast<double>(i) / static_cast<double>(steps - 1);
  }
};

/// One run of the simulator. Angles are stored in radians.
struct ScenarioConfig {
  ScenarioKind kind = ScenarioKind::common_path;
  EarthModel earth = default_earth();
  double colatitude = kPi / 4.0;
  double alpha = 0.0;
  double beta = 0.0;
  double area = 1e6;      ///< m^2, common path
  double long_arm = 1e3;  ///< m, dual arm
  double short_arm = 1e3; ///< m, dual arm
  double spectral_width = 1e13; ///< rad/s
  double visibility = 1.0;
  double jitter_sigma = 0.0; ///< s
  JitterMode jitter_mode = JitterMode::analytic;
  std::size_t mc_samples = 10000;
  int loop_segments = kDefaultLoopSegments;
  std::optional<SweepSpec> sweep;
  std::string output;
  std::uint64_t seed = 0;
};

/// Validation failure carrying every violated field.
class ConfigError : public std::runtime_error {
public:
  explicit ConfigError(std::vector<std::string> issues)
      : std::runtime_error(join(issues)), issues_(std::move(issues)) {}
  const std::vector<std::string>& issues() const { return issues_; }

private:
  static std::string join(const std::vector<std::string>& issues) {
    std::string out = "invalid scenario configuration";
    for (const auto& i : issues) out += "\n  " + i;
    return out;
  }
  std::vector<std::string> issues_;
};

class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Returns a copy of `cfg` with the sweep variable set to `value`.
inline ScenarioConfig apply_sweep_value(ScenarioConfig cfg, SweepVariable var, double value) {
  switch (var) {
  case SweepVariable::colatitude_deg: cfg.colatitude = deg_to_rad(value); break;
  case SweepVariable::latitude_deg: cfg.colatitude = deg_to_rad(90.0 - value); break;
  case SweepVariable::alpha_deg: cfg.alpha = deg_to_rad(value); break;
  case SweepVariable::beta_deg: cfg.beta = deg_to_rad(value); break;
  case SweepVariable::area_m2: cfg.area = value; break;
  case SweepVariable::long_arm_m: cfg.long_arm = value; break;
  case SweepVariable::short_arm_m: cfg.short_arm = value; break;
  }
  return cfg;
}

/// Circumradius of the regular polygon make_loop would build.
inline double loop_circumradius(double area, int segments) {
  const double n = segments;
  return std::sqrt(2.0 * area / (n * std::sin(2.0 * kPi / n)));
}

namespace detail {

// Checks a single evaluation point; prefix names the source of the values.
inline void validate_point(const ScenarioConfig& c, const std::string& prefix, std::vector<std::string>& issues) {
  auto bad = [&](const std::string& field, const std::string& what) { issues.push_back(prefix + field + ": " + what); };
  if (!(c.colatitude >= 0.0 && c.colatitude <= kPi)) bad("colatitude", "must lie in [0, 180] degrees");
  if (!std::isfinite(c.alpha)) bad("alpha_deg", "must be finite");
  if (!std::isfinite(c.beta)) bad("beta_deg", "must be finite");
  if (c.kind == ScenarioKind::common_path) {
    if (!(c.area > 0.0) || !std::isfinite(c.area)) {
      bad("area_m2", "must be positive");
    } else if (c.loop_segments >= 3 && !(loop_circumradius(c.area, c.loop_segments) < kMaxLocalExtent)) {
      bad("area_m2", "loop exceeds the local-frame validity region (1e5 m)");
    }
  } else {
    const bool l_ok = c.long_arm > 0.0 && std::isfinite(c.long_arm);
    const bool d_ok = c.short_arm > 0.0 && std::isfinite(c.short_arm);
    if (!l_ok) bad("long_arm_m", "must be positive");
    if (!d_ok) bad("short_arm_m", "must be positive");
    if (l_ok && d_ok && !(std::hypot(c.long_arm, c.short_arm) < kMaxLocalExtent))
      bad("long_arm_m", "interferometer exceeds the local-frame validity region (1e5 m)");
  }
}

} // namespace detail

/// Every violated precondition, as "field: reason". Empty means runnable.
inline std::vector<std::string> validate(const ScenarioConfig& c) {
  std::vector<std::string> issues;
  for (const auto& e : check_invariants(c.earth)) issues.push_back("earth." + e);
  if (!(c.spectral_width > 0.0) || !std::isfinite(c.spectral_width))
    issues.emplace_back("spectral_width_rad_s: must be positive");
  if (!(c.visibility >= 0.0 && c.visibility <= 1.0)) issues.emplace_back("visibility: must lie in [0, 1]");
  if (!(c.jitter_sigma >= 0.0) || !std::isfinite(c.jitter_sigma))
    issues.emplace_back("jitter_sigma_s: must be non-negative");
  if (c.jitter_mode == JitterMode::montecarlo && c.mc_samples < 1)
    issues.emplace_back("mc_samples: must be at least 1");
  if (c.loop_segments < 3) issues.emplace_back("loop_segments: must be at least 3");

  if (c.sweep) {
    const SweepSpec& s = *c.sweep;
    if (s.steps < 1) issues.emplace_back("sweep.steps: must be at least 1");
    if (!std::isfinite(s.start)) issues.emplace_back("sweep.start: must be finite");
    if (!std::isfinite(s.stop)) issues.emplace_back("sweep.stop: must be finite");
    const bool dual_only = s.variable == SweepVariable::long_arm_m || s.variable == SweepVariable::short_arm_m;
    if (dual_only && c.kind != ScenarioKind::dual_arm)
      issues.emplace_back(std::string("sweep.variable: ") + to_string(s.variable) + " needs scenario dual_arm");
    if (s.variable == SweepVariable::area_m2 && c.kind != ScenarioKind::common_path)
      issues.emplace_back("sweep.variable: area_m2 needs scenario common_path");
    // Every constraint is an interval, so checking both ends covers the sweep.
    if (std::isfinite(s.start))
      detail::validate_point(apply_sweep_value(c, s.variable, s.start), "sweep.start -> ", issues);
    if (std::isfinite(s.stop) && s.steps > 1)
      detail::validate_point(apply_sweep_value(c, s.variable, s.stop), "sweep.stop -> ", issues);
  } else {
    detail::validate_point(c, "", issues);
  }
  return issues;
}

// ---------------------------------------------------------------------------
// JSON configuration
// ---------------------------------------------------------------------------

/// Reads a configuration document. Throws ConfigError listing all problems,
/// including unknown keys and type mismatches, after range validation.
inline ScenarioConfig parse_config(const nlohmann::json& doc) {
  std::vector<std::string> issues;
  ScenarioConfig cfg;
  if (!doc.is_object()) throw ConfigError({"<root>: configuration must be a JSON object"});

  auto number = [&](const nlohmann::json& obj, const char* key, const std::string& path) -> std::optional<double> {
    if (!obj.contains(key)) return std::nullopt;
    const auto& v = obj.at(key);
    if (!v.is_number()) {
      issues.push_back(path + key + ": must be a number");
      return std::nullopt;
    }
    return v.get<double>();
  };
  auto integer = [&](const nlohmann::json& obj, const char* key, const std::string& path) -> std::optional<std::int64_t> {
    if (!obj.contains(key)) return std::nullopt;
    const auto& v = obj.at(key);
    if (!v.is_number_integer()) {
      issues.push_back(path + key + ": must be an integer");
      return std::nullopt;
    }
    return v.get<std::int64_t>();
  };
  auto text = [&](const nlohmann::json& obj, const char* key, const std::string& path) -> std::optional<std::string> {
    if (!obj.contains(key)) return std::nullopt;
    const auto& v = obj.at(key);
    if (!v.is_string()) {
      issues.push_back(path + key + ": must be a string");
      return std::nullopt;
    }
    return v.get<std::string>();
  };
  auto reject_unknown = [&](const nlohmann::json& obj, std::initializer_list<const char*> known, const std::string& path) {
    for (const auto& [k, _] : obj.items())
      if (std::none_of(known.begin(), known.end(), [&](const char* n) { return k == n; }))
        issues.push_back(path + k + ": unknown key");
  };

  reject_unknown(doc,
                 {"scenario", "earth", "colatitude_deg", "latitude_deg", "alpha_deg", "beta_deg", "area_m2", "fiber",
                  "long_arm_m", "short_arm_m", "spectral_width_rad_s", "visibility", "jitter_sigma_s", "jitter_mode",
                  "mc_samples", "loop_segments", "sweep", "output", "seed"},
                 "");

  if (auto s = text(doc, "scenario", "")) {
    if (*s == "common_path") cfg.kind = ScenarioKind::common_path;
    else if (*s == "dual_arm") cfg.kind = ScenarioKind::dual_arm;
    else issues.push_back("scenario: must be common_path or dual_arm");
  } else if (!doc.contains("scenario")) {
    issues.emplace_back("scenario: required");
  }

  if (doc.contains("earth")) {
    const auto& e = doc.at("earth");
    if (!e.is_object()) {
      issues.emplace_back("earth: must be an object");
    } else {
      reject_unknown(e, {"grav_const", "mass", "radius", "moment_of_inertia", "spin_rate", "surface_gravity", "light_speed"},
                     "earth.");
      if (auto v = number(e, "grav_const", "earth.")) cfg.earth.grav_const = *v;
      if (auto v = number(e, "mass", "earth.")) cfg.earth.mass = *v;
      if (auto v = number(e, "radius", "earth.")) cfg.earth.radius = *v;
      if (auto v = number(e, "spin_rate", "earth.")) cfg.earth.spin_rate = *v;
      if (auto v = number(e, "surface_gravity", "earth.")) cfg.earth.surface_gravity = *v;
      if (auto v = number(e, "light_speed", "earth.")) cfg.earth.light_speed = *v;
      if (auto v = number(e, "moment_of_inertia", "earth.")) cfg.earth.moment_of_inertia = *v;
      else cfg.earth.moment_of_inertia = 0.3307 * cfg.earth.mass * cfg.earth.radius * cfg.earth.radius;
    }
  }

  const bool has_colat = doc.contains("colatitude_deg");
  const bool has_lat = doc.contains("latitude_deg");
  if (has_colat && has_lat) issues.emplace_back("latitude_deg: give either colatitude_deg or latitude_deg, not both");
  if (auto v = number(doc, "colatitude_deg", "")) cfg.colatitude = deg_to_rad(*v);
  if (auto v = number(doc, "latitude_deg", "")) cfg.colatitude = deg_to_rad(90.0 - *v);
  if (auto v = number(doc, "alpha_deg", "")) cfg.alpha = deg_to_rad(*v);
  if (auto v = number(doc, "beta_deg", "")) cfg.beta = deg_to_rad(*v);
  if (auto v = number(doc, "area_m2", "")) cfg.area = *v;
  if (doc.contains("fiber")) {
    const auto& f = doc.at("fiber");
    if (doc.contains("area_m2")) issues.emplace_back("fiber: give either area_m2 or fiber, not both");
    if (!f.is_object()) {
      issues.emplace_back("fiber: must be an object");
    } else {
      reject_unknown(f, {"length_m", "radius_m"}, "fiber.");
      const auto len = number(f, "length_m", "fiber.");
      const auto rad = number(f, "radius_m", "fiber.");
      if (!len || !rad) issues.emplace_back("fiber: needs length_m and radius_m");
      else if (!(*len > 0.0) || !(*rad > 0.0)) issues.emplace_back("fiber: length_m and radius_m must be positive");
      else cfg.area = fiber_loop_area(*len, *rad);
    }
  }
  if (auto v = number(doc, "long_arm_m", "")) cfg.long_arm = *v;
  if (auto v = number(doc, "short_arm_m", "")) cfg.short_arm = *v;
  if (auto v = number(doc, "spectral_width_rad_s", "")) cfg.spectral_width = *v;
  if (auto v = number(doc, "visibility", "")) cfg.visibility = *v;
  if (auto v = number(doc, "jitter_sigma_s", "")) cfg.jitter_sigma = *v;
  if (auto s = text(doc, "jitter_mode", "")) {
    if (*s == "analytic") cfg.jitter_mode = JitterMode::analytic;
    else if (*s == "montecarlo") cfg.jitter_mode = JitterMode::montecarlo;
    else issues.emplace_back("jitter_mode: must be analytic or montecarlo");
  }
  if (auto v = integer(doc, "mc_samples", "")) {
    if (*v < 1) issues.emplace_back("mc_samples: must be at least 1");
    else cfg.mc_samples = static_cast<std::size_t>(*v);
  }
  if (auto v = integer(doc, "loop_segments", "")) {
    cfg.loop_segments = static_cast<int>(std::clamp<std::int64_t>(*v, std::numeric_limits<int>::min(),
                                                                   std::numeric_limits<int>::max()));
  }
  if (auto s = text(doc, "output", "")) cfg.output = *s;
  if (auto v = integer(doc, "seed", "")) {
    if (*v < 0) issues.emplace_back("seed: must be non-negative");
    else cfg.seed = static_cast<std::uint64_t>(*v);
  }

  if (doc.contains("sweep")) {
    const auto& s = doc.at("sweep");
    if (!s.is_object()) {
      issues.emplace_back("sweep: must be an object");
    } else {
      reject_unknown(s, {"variable", "start", "stop", "steps"}, "sweep.");
      SweepSpec spec;
      bool ok = true;
      if (auto name = text(s, "variable", "sweep.")) {
        if (auto var = parse_sweep_variable(*name)) spec.variable = *var;
        else { issues.push_back("sweep.variable: unknown variable '" + *name + "'"); ok = false; }
      } else { issues.emplace_back("sweep.variable: required"); ok = false; }
      if (auto v = number(s, "start", "sweep.")) spec.start = *v; else { ok = false; if (!s.contains("start")) issues.emplace_back("sweep.start: required"); }
      if (auto v = number(s, "stop", "sweep.")) spec.stop = *v; else { ok = false; if (!s.contains("stop")) issues.emplace_back("sweep.stop: required"); }
      if (auto v = integer(s, "steps", "sweep.")) {
        spec.steps = static_cast<int>(std::clamp<std::int64_t>(*v, -1, 10'000'000));
      } else { ok = false; if (!s.contains("steps")) issues.emplace_back("sweep.steps: required"); }
      if (ok) cfg.sweep = spec;
    }
  }

  const auto range_issues = validate(cfg);
  issues.insert(issues.end(), range_issues.begin(), range_issues.end());
  if (!issues.empty()) throw ConfigError(issues);
  return cfg;
}

inline ScenarioConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open configuration file " + path.string());
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in, nullptr, true, /*ignore_comments=*/true);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError({std::string("<document>: ") + e.what()});
  }
  return parse_config(doc);
}

// ---------------------------------------------------------------------------
// Sweep
// ---------------------------------------------------------------------------

struct SweepRow {
  double swept_value = 0.0;
  DelayBreakdown terms;
  double total_delay = 0.0;   ///< s, closed form
  double c_delay = 0.0;       ///< m
  double numeric_delay = 0.0; ///< s, eikonal integral of the same effects
  double dip_minimum = 0.0;   ///< s, scan delay of the HOM minimum
  double pc_zero_scan = 0.0;
  double pc_standard_error = 0.0;
  bool resolvable = false;
};

struct SweepResult {
  SweepVariable variable = SweepVariable::alpha_deg;
  std::vector<SweepRow> rows;
};

/// Evaluates one configuration point (no sweep applied).
inline SweepRow evaluate_point(const ScenarioConfig& c, std::uint64_t seed) {
  SweepRow row;
  if (c.kind == ScenarioKind::common_path) {
    row.terms = sagnac_gr_delay(c.earth, c.colatitude, c.alpha, c.area);
    const MetricPerturbation metric = local_metric(make_frame(c.earth, c.colatitude));
    row.numeric_delay = loop_delay(metric, make_loop(c.area, c.alpha, c.loop_segments));
  } else {
    row.terms = dual_arm_delay(c.earth, c.colatitude, c.alpha, c.beta, c.long_arm, c.short_arm);
    row.numeric_delay =
        dual_arm_delay_numeric(c.earth, c.colatitude, c.alpha, c.beta, c.long_arm, c.short_arm).total();
  }
  row.total_delay = row.terms.total();
  row.c_delay = c.earth.light_speed * row.total_delay;
  row.dip_minimum = row.total_delay;
  // At zero scan delay the photons are offset by -total relative to the dip centre.
  const JitterModel jitter{-row.total_delay, c.jitter_sigma, seed};
  const JitterPoint p = dip_with_jitter(jitter, c.spectral_width, c.visibility, c.jitter_mode, c.mc_samples);
  row.pc_zero_scan = p.probability;
  row.pc_standard_error = p.standard_error;
  row.resolvable = is_resolvable(row.total_delay, c.jitter_sigma);
  return row;
}

/// Runs the configured sweep. Rows come back in sweep order whatever the
/// thread count; row i uses seed + i so results do not depend on scheduling.
inline SweepResult run_scenario(const ScenarioConfig& cfg, unsigned threads = 1) {
  if (auto issues = validate(cfg); !issues.empty()) throw ConfigError(std::move(issues));
  if (!cfg.sweep) throw ConfigError({"sweep: required for a sweep run"});
  const SweepSpec spec = *cfg.sweep;

  SweepResult result;
  result.variable = spec.variable;
  result.rows.resize(static_cast<std::size_t>(spec.steps));

  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < spec.steps; i = next++) {
      const double value = spec.value(i);
      SweepRow row = evaluate_point(apply_sweep_value(cfg, spec.variable, value), cfg.seed + static_cast<std::uint64_t>(i));
      row.swept_value = value;
      result.rows[static_cast<std::size_t>(i)] = row;
    }
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(spec.steps)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  return result;
}

// ---------------------------------------------------------------------------
// Figures of merit
// ---------------------------------------------------------------------------

struct FigureOfMeritRow {
  std::string effect;
  double figure_of_merit = 0.0; ///< s/km^2
  double delay_max = 0.0;       ///< s, largest |dt| over the sweep
  double delay_min = 0.0;       ///< s, smallest |dt| over the sweep
  double area = 0.0;            ///< m^2
  std::string swept;
};

inline constexpr int kEstimateOrientationSteps = 720;

/// F = (max|dt| - min|dt|) / A for the Sagnac, geodetic + Lense-Thirring,
/// gravitational and centrifugal delays. Common-path effects sweep alpha over
/// a full turn; dual-arm effects sweep beta over a full turn at the configured
/// alpha. Both use the configured colatitude.
inline std::vector<FigureOfMeritRow> run_estimates(const ScenarioConfig& cfg,
                                                   int orientation_steps = kEstimateOrientationSteps) {
  ScenarioConfig point = cfg;
  point.sweep.reset();
  if (auto issues = validate(point); !issues.empty()) throw ConfigError(std::move(issues));
  if (orientation_steps < 4) throw std::domain_error("run_estimates: need at least 4 orientation steps");

  const double loop_area = cfg.kind == ScenarioKind::common_path ? cfg.area : cfg.long_arm * cfg.short_arm;
  const double long_arm = cfg.kind == ScenarioKind::dual_arm ? cfg.long_arm : std::sqrt(cfg.area);
  const double short_arm = cfg.kind == ScenarioKind::dual_arm ? cfg.short_arm : std::sqrt(cfg.area);

  struct Span {
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    void add(double v) { lo = std::min(lo, std::abs(v)); hi = std::max(hi, std::abs(v)); }
  };
  Span sag, gr, grav, cent;
  for (int i = 0; i < orientation_steps; ++i) {
    const double angle = 2.0 * kPi * i / orientation_steps;
    const DelayBreakdown loop = sagnac_gr_delay(cfg.earth, cfg.colatitude, angle, loop_area);
    sag.add(loop.sagnac);
    gr.add(loop.relativistic());
    const DelayBreakdown arms = dual_arm_delay(cfg.earth, cfg.colatitude, cfg.alpha, angle, long_arm, short_arm);
    grav.add(arms.gravitational);
    cent.add(arms.centrifugal);
  }
  const double arm_area = long_arm * short_arm;
  auto row = [](const char* name, const Span& s, double area, const char* swept) {
    return FigureOfMeritRow{name, figure_of_merit(s.hi, s.lo, area), s.hi, s.lo, area, swept};
  };
  return {row("F_Sag", sag, loop_area, "alpha"), row("F_GR", gr, loop_area, "alpha"),
          row("F_g", grav, arm_area, "beta"), row("F_a", cent, arm_area, "beta")};
}

// ---------------------------------------------------------------------------
// CSV
// ---------------------------------------------------------------------------

/// Scientific notation with 17 significant digits; round-trips every double.
inline std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

inline void write_sweep_csv(const SweepResult& r, std::ostream& out) {
  out << to_string(r.variable)
      << ",sagnac_s,geodetic_s,lense_thirring_s,gravitational_s,centrifugal_s,delay_total_s,c_delay_m,"
         "delay_numeric_s,dip_min_s,pc_zero_scan,pc_std_error,resolvable\n";
  for (const auto& row : r.rows) {
    out << format_number(row.swept_value) << ',' << format_number(row.terms.sagnac) << ','
        << format_number(row.terms.geodetic) << ',' << format_number(row.terms.lense_thirring) << ','
        << format_number(row.terms.gravitational) << ',' << format_number(row.terms.centrifugal) << ','
        << format_number(row.total_delay) << ',' << format_number(row.c_delay) << ','
        << format_number(row.numeric_delay) << ',' << format_number(row.dip_minimum) << ','
        << format_number(row.pc_zero_scan) << ',' << format_number(row.pc_standard_error) << ','
        << (row.resolvable ? 1 : 0) << '\n';
  }
}

inline void write_estimates_csv(const std::vector<FigureOfMeritRow>& rows, std::ostream& out) {
  out << "effect,figure_of_merit_s_per_km2,delay_max_s,delay_min_s,area_m2,swept\n";
  for (const auto& r : rows)
    out << r.effect << ',' << format_number(r.figure_of_merit) << ',' << format_number(r.delay_max) << ','
        << format_number(r.delay_min) << ',' << format_number(r.area) << ',' << r.swept << '\n';
}

/// Writes through a temporary string so a failed open leaves nothing behind.
template <class Writer>
void write_file(const std::filesystem::path& path, Writer&& writer) {
  std::ostringstream buf;
  writer(buf);
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open output file " + path.string());
  out << buf.str();
  out.close();
  if (!out) throw IoError("failed writing output file " + path.string());
}

/// Numeric CSV table with a header row. Non-numeric cells are kept as text.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> cells;

  std::size_t column(const std::string& name) const {
    const auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) throw std::out_of_range("CsvTable: no column " + name);
    return static_cast<std::size_t>(it - header.begin());
  }
  double number(std::size_t row, const std::string& name) const { return std::stod(cells.at(row).at(column(name))); }
  std::vector<double> numbers(const std::string& name) const {
    std::vector<double> out;
    const std::size_t col = column(name);
    for (const auto& r : cells) out.push_back(std::strtod(r.at(col).c_str(), nullptr));
    return out;
  }
};

inline CsvTable read_csv(std::istream& in) {
  auto split = [](const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) out.push_back(cell);
    return out;
  };
  CsvTable t;
  std::string line;
  if (std::getline(in, line)) t.header = split(line);
  while (std::getline(in, line))
    if (!line.empty()) t.cells.push_back(split(line));
  return t;
}

// ---------------------------------------------------------------------------
// Output location
// ---------------------------------------------------------------------------

inline constexpr const char* kOutputDirEnv = "HOMGR_OUTPUT_DIR";

/// --out wins over the config's "output"; a relative result is placed under
/// $HOMGR_OUTPUT_DIR when that is set.
inline std::filesystem::path resolve_output_path(const std::string& cli_out, const std::string& config_out,
                                                 const char* env_dir, const std::string& fallback) {
  std::filesystem::path p = !cli_out.empty() ? cli_out : (!config_out.empty() ? config_out : fallback);
  if (env_dir && *env_dir && p.is_relative()) p = std::filesystem::path(env_dir) / p;
  return p;
}

} // namespace homgr
