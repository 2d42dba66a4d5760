#include "gazekit/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <json.hpp>

#include "gazekit/error.hpp"
#include "gazekit/rng.hpp"

namespace gazekit {

using nlohmann::json;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kMaxConvergenceM = 12.0;

double deg2rad(double d) { return d * kPi / 180.0; }

Vec3 dir_from_angles(double az_rad, double el_rad) {
  return {std::sin(az_rad) * std::cos(el_rad), std::sin(el_rad),
          std::cos(az_rad) * std::cos(el_rad)};
}

double vergence_angle(double depth_m, double baseline_m) {
  return 2.0 * std::atan(baseline_m / (2.0 * depth_m));
}

double depth_from_vergence(double v_rad, double baseline_m) {
  return baseline_m / (2.0 * std::tan(v_rad / 2.0));
}

struct Segment {
  bool saccade = false;
  double t0 = 0.0, t1 = 0.0;
  // fixation: az0/el0/c0 hold; saccade: interpolate 0 -> 1.
  double az0 = 0.0, el0 = 0.0, c0 = 1.0;
  double az1 = 0.0, el1 = 0.0, c1 = 1.0;
  double amplitude = 0.0;  // degrees, saccades only
};

void require(bool ok, const char* what) {
  if (!ok) fail(errc::invalid_config, what);
}

void validate(const SynthConfig& c) {
  require(c.duration_s > 0.0, "duration_s must be > 0");
  require(c.rate_hz > 0.0, "rate_hz must be > 0");
  require(c.fixation_ms_range.first > 0.0 &&
              c.fixation_ms_range.second >= c.fixation_ms_range.first,
          "fixation_ms_range must be positive and ordered");
  require(c.amplitude_deg_range.first > 0.0 &&
              c.amplitude_deg_range.second >= c.amplitude_deg_range.first,
          "amplitude_deg_range must be positive and ordered");
  require(c.main_sequence_ms_per_deg >= 0.0 && c.main_sequence_intercept_ms > 0.0,
          "main sequence constants must be positive");
  require(c.noise_deg_sigma >= 0.0, "noise_deg_sigma must be >= 0");
  require(c.amblyopic_offset_deg >= 0.0, "amblyopic_offset_deg must be >= 0");
  require(c.convergence_m_range.first > 0.0 &&
              c.convergence_m_range.second >= c.convergence_m_range.first,
          "convergence_m_range must be positive and ordered");
  require(c.saccade_vergence_deg >= 0.0, "saccade_vergence_deg must be >= 0");
  require(c.gaze_box_deg > 0.0, "gaze_box_deg must be > 0");
  require(c.dropout_fraction >= 0.0 && c.dropout_fraction < 1.0,
          "dropout_fraction must be in [0, 1)");
  require(c.head_sway_m >= 0.0, "head_sway_m must be >= 0");
  require(c.interocular_baseline_m > 0.0, "interocular_baseline_m must be > 0");
}

}  // namespace

double saccade_displacement(double amplitude_deg, double duration_s, double t) {
  if (amplitude_deg <= 0.0 || duration_s <= 0.0)
    fail(errc::out_of_range, "saccade_displacement: amplitude and duration must be > 0");
  if (t < 0.0 || t > duration_s)
    fail(errc::out_of_range, "saccade_displacement: t outside [0, duration]");
  return amplitude_deg * (1.0 - std::cos(kPi * t / duration_s)) / 2.0;
}

SynthResult generate_session(const SynthConfig& cfg) {
  validate(cfg);
  Rng rng(cfg.seed);

  const double b = cfg.interocular_baseline_m;
  const double v_min = vergence_angle(kMaxConvergenceM, b);

  // Session-level draws, in fixed order.
  const double depth0 = rng.uniform(cfg.convergence_m_range.first,
                                    cfg.convergence_m_range.second);
  const double sway_phase[3] = {rng.uniform(0.0, 2.0 * kPi),
                                rng.uniform(0.0, 2.0 * kPi),
                                rng.uniform(0.0, 2.0 * kPi)};
  // The two pupils track each other (consensual response); anisocoria is a
  // small fixed split around a shared session baseline.
  const double pupil_shared = rng.uniform(3.0, 4.0);
  const double pupil_aniso = rng.uniform(-0.2, 0.2);
  const double pupil_base[2] = {pupil_shared + pupil_aniso / 2.0,
                                pupil_shared - pupil_aniso / 2.0};
  const double pupil_phase = rng.uniform(0.0, 2.0 * kPi);

  // Script the fixation/saccade timeline past the last sample.
  std::vector<Segment> segments;
  std::vector<LabelInterval> saccades;
  double az = 0.0, el = 0.0, depth = depth0;
  double t = 0.0;
  const double el_box = 0.6 * cfg.gaze_box_deg;
  while (t <= cfg.duration_s) {
    // Fixation durations skew short within the configured range
    // (density 2(1-u)), as real fixation-duration distributions do.
    const double skew = 1.0 - std::sqrt(1.0 - rng.unit());
    const double fix_s = (cfg.fixation_ms_range.first +
                          (cfg.fixation_ms_range.second - cfg.fixation_ms_range.first) *
                              skew) / 1000.0;
    segments.push_back({false, t, t + fix_s, az, el, depth, az, el, depth, 0.0});
    t += fix_s;
    if (t > cfg.duration_s) break;

    const double amp = rng.uniform(cfg.amplitude_deg_range.first,
                                   cfg.amplitude_deg_range.second);
    double tgt_az = az, tgt_el = el;
    for (int attempt = 0; attempt < 20; ++attempt) {
      const double phi = rng.uniform(0.0, 2.0 * kPi);
      tgt_az = az + amp * std::cos(phi);
      tgt_el = el + amp * std::sin(phi);
      if (std::abs(tgt_az) <= cfg.gaze_box_deg && std::abs(tgt_el) <= el_box) break;
    }
    tgt_az = std::clamp(tgt_az, -cfg.gaze_box_deg, cfg.gaze_box_deg);
    tgt_el = std::clamp(tgt_el, -el_box, el_box);
    const double actual_amp = std::hypot(tgt_az - az, tgt_el - el);
    if (actual_amp < 1e-9) continue;

    const double dur_s = (cfg.main_sequence_ms_per_deg * actual_amp +
                          cfg.main_sequence_intercept_ms) / 1000.0;
    const double tgt_depth = rng.uniform(cfg.convergence_m_range.first,
                                         cfg.convergence_m_range.second);
    segments.push_back({true, t, t + dur_s, az, el, depth, tgt_az, tgt_el,
                        tgt_depth, actual_amp});
    saccades.push_back({t, t + dur_s});
    t += dur_s;
    az = tgt_az;
    el = tgt_el;
    depth = tgt_depth;
  }

  SynthResult result;
  result.saccades = saccades;
  Session& session = result.session;
  session.participant_id = cfg.participant;
  session.rate_hz = cfg.rate_hz;
  session.source = "synthetic";

  const auto n = static_cast<std::size_t>(std::llround(cfg.duration_s * cfg.rate_hz));
  session.samples.reserve(n);

  const double sigma = deg2rad(cfg.noise_deg_sigma);
  const double offset = deg2rad(cfg.amblyopic_offset_deg);
  const double jitter_sigma = 0.15 * offset;

  std::size_t seg = 0;
  std::size_t label_cursor = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const double tk = static_cast<double>(k) / cfg.rate_hz;
    while (seg + 1 < segments.size() && tk >= segments[seg].t1) ++seg;
    const Segment& s = segments[seg];

    double az_c, el_c, c_inst;
    if (!s.saccade) {
      az_c = s.az0;
      el_c = s.el0;
      c_inst = s.c0;
    } else {
      const double dur = s.t1 - s.t0;
      const double tau = std::clamp(tk - s.t0, 0.0, dur);
      const double frac = saccade_displacement(s.amplitude, dur, tau) / s.amplitude;
      az_c = s.az0 + (s.az1 - s.az0) * frac;
      el_c = s.el0 + (s.el1 - s.el0) * frac;
      const double v0 = vergence_angle(s.c0, b);
      const double v1 = vergence_angle(s.c1, b);
      const double peak = deg2rad(cfg.saccade_vergence_deg *
                                  std::clamp(s.amplitude / 10.0, 0.3, 1.0));
      const double v = std::max(v_min, v0 + (v1 - v0) * frac -
                                           peak * std::sin(kPi * tau / dur));
      c_inst = std::min(depth_from_vergence(v, b), kMaxConvergenceM);
    }

    // Per-frame draws, in fixed order regardless of config values.
    const double noise_l_az = rng.gaussian() * sigma;
    const double noise_l_el = rng.gaussian() * sigma;
    const double noise_r_az = rng.gaussian() * sigma;
    const double noise_r_el = rng.gaussian() * sigma;
    const double amblyopic_jitter = rng.gaussian() * jitter_sigma;
    const double sway_noise[3] = {rng.gaussian() * 0.0002, rng.gaussian() * 0.0002,
                                  rng.gaussian() * 0.0002};
    const double pupil_common = rng.gaussian() * 0.025;
    const double pupil_split = rng.gaussian() * 0.012;
    const double pupil_noise[2] = {pupil_common + pupil_split,
                                   pupil_common - pupil_split};
    const double guide_noise[4] = {rng.gaussian() * 0.004, rng.gaussian() * 0.004,
                                   rng.gaussian() * 0.004, rng.gaussian() * 0.004};
    const double dropout_u = rng.unit();

    const Vec3 head{
        cfg.head_sway_m * std::sin(2.0 * kPi * 0.23 * tk + sway_phase[0]) + sway_noise[0],
        cfg.head_sway_m * std::sin(2.0 * kPi * 0.31 * tk + sway_phase[1]) + sway_noise[1],
        cfg.head_sway_m * std::sin(2.0 * kPi * 0.17 * tk + sway_phase[2]) + sway_noise[2]};
    const Vec3 origin_l = head + Vec3{-b / 2.0, 0.0, 0.0};
    const Vec3 origin_r = head + Vec3{b / 2.0, 0.0, 0.0};
    const Vec3 target = head + c_inst * dir_from_angles(deg2rad(az_c), deg2rad(el_c));

    auto eye_dir = [](const Vec3& from, const Vec3& to, double d_az, double d_el) {
      const Vec3 d = (to - from).normalized();
      const double az_r = std::atan2(d.x, d.z) + d_az;
      const double el_r = std::asin(std::clamp(d.y, -1.0, 1.0)) + d_el;
      return dir_from_angles(az_r, el_r);
    };
    const Vec3 dir_l =
        eye_dir(origin_l, target, noise_l_az + offset + amblyopic_jitter, noise_l_el);
    const Vec3 dir_r = eye_dir(origin_r, target, noise_r_az, noise_r_el);
    const Vec3 dir_c = (dir_l + dir_r).normalized();

    GazeSample sample;
    sample.timestamp_s = tk;
    sample.left_gaze_dir = dir_l;
    sample.left_gaze_origin = origin_l;
    sample.left_pupil_diameter = std::max(
        0.5, pupil_base[0] + 0.22 * std::sin(2.0 * kPi * 0.05 * tk + pupil_phase) +
                 pupil_noise[0]);
    sample.left_position_guide = {
        std::clamp(0.5 + 0.45 * dir_l.x + guide_noise[0], 0.0, 1.0),
        std::clamp(0.5 + 0.45 * dir_l.y + guide_noise[1], 0.0, 1.0)};
    sample.right_gaze_dir = dir_r;
    sample.right_gaze_origin = origin_r;
    sample.right_pupil_diameter = std::max(
        0.5, pupil_base[1] + 0.22 * std::sin(2.0 * kPi * 0.05 * tk + pupil_phase) +
                 pupil_noise[1]);
    sample.right_position_guide = {
        std::clamp(0.5 + 0.45 * dir_r.x + guide_noise[2], 0.0, 1.0),
        std::clamp(0.5 + 0.45 * dir_r.y + guide_noise[3], 0.0, 1.0)};
    sample.combined_gaze_dir = dir_c;
    sample.combined_gaze_origin = head;
    sample.convergence_distance_m = c_inst;
    sample.valid_combined = true;
    sample.valid_left = true;
    sample.valid_right = true;

    if (dropout_u < cfg.dropout_fraction) {
      const double which = rng.unit();
      if (which < 1.0 / 3.0) {
        sample.valid_left = false;
        sample.left_gaze_dir = {};
        sample.left_pupil_diameter = 0.0;
        sample.left_position_guide = {};
      } else if (which < 2.0 / 3.0) {
        sample.valid_right = false;
        sample.right_gaze_dir = {};
        sample.right_pupil_diameter = 0.0;
        sample.right_position_guide = {};
      } else {
        sample.valid_combined = false;
        sample.combined_gaze_dir = {};
        sample.convergence_distance_m = 0.0;
      }
    }

    while (label_cursor < saccades.size() && saccades[label_cursor].end_s < tk)
      ++label_cursor;
    sample.label = label_cursor < saccades.size() &&
                   saccades[label_cursor].start_s <= tk;

    session.samples.push_back(sample);
  }
  return result;
}

SynthConfig synth_config_from_json(std::string_view text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded() || !doc.is_object())
    fail(errc::malformed_document, "synth config is not a JSON object");

  SynthConfig cfg;
  auto num = [&](const char* key, double& out) {
    if (doc.contains(key)) {
      if (!doc[key].is_number())
        fail(errc::malformed_document, std::string("synth config: ") + key);
      out = doc[key].get<double>();
    }
  };
  auto range = [&](const char* key, std::pair<double, double>& out) {
    if (doc.contains(key)) {
      const json& v = doc[key];
      if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
        fail(errc::malformed_document,
             std::string("synth config: ") + key + " must be [lo, hi]");
      out = {v[0].get<double>(), v[1].get<double>()};
    }
  };
  num("duration_s", cfg.duration_s);
  num("rate_hz", cfg.rate_hz);
  range("fixation_ms_range", cfg.fixation_ms_range);
  range("amplitude_deg_range", cfg.amplitude_deg_range);
  num("main_sequence_ms_per_deg", cfg.main_sequence_ms_per_deg);
  num("main_sequence_intercept_ms", cfg.main_sequence_intercept_ms);
  num("noise_deg_sigma", cfg.noise_deg_sigma);
  num("amblyopic_offset_deg", cfg.amblyopic_offset_deg);
  range("convergence_m_range", cfg.convergence_m_range);
  num("saccade_vergence_deg", cfg.saccade_vergence_deg);
  num("gaze_box_deg", cfg.gaze_box_deg);
  num("dropout_fraction", cfg.dropout_fraction);
  num("head_sway_m", cfg.head_sway_m);
  num("interocular_baseline_m", cfg.interocular_baseline_m);
  if (doc.contains("participant")) {
    if (!doc["participant"].is_string())
      fail(errc::malformed_document, "synth config: participant must be a string");
    cfg.participant = doc["participant"].get<std::string>();
  }
  if (doc.contains("seed")) {
    if (!doc["seed"].is_number_unsigned() && !doc["seed"].is_number_integer())
      fail(errc::malformed_document, "synth config: seed must be an integer");
    cfg.seed = doc["seed"].get<std::uint64_t>();
  }
  validate(cfg);
  return cfg;
}

std::string synth_config_to_json(const SynthConfig& cfg) {
  json doc;
  doc["duration_s"] = cfg.duration_s;
  doc["rate_hz"] = cfg.rate_hz;
  doc["fixation_ms_range"] = {cfg.fixation_ms_range.first, cfg.fixation_ms_range.second};
  doc["amplitude_deg_range"] = {cfg.amplitude_deg_range.first,
                                cfg.amplitude_deg_range.second};
  doc["main_sequence_ms_per_deg"] = cfg.main_sequence_ms_per_deg;
  doc["main_sequence_intercept_ms"] = cfg.main_sequence_intercept_ms;
  doc["noise_deg_sigma"] = cfg.noise_deg_sigma;
  doc["amblyopic_offset_deg"] = cfg.amblyopic_offset_deg;
  doc["convergence_m_range"] = {cfg.convergence_m_range.first,
                                cfg.convergence_m_range.second};
  doc["saccade_vergence_deg"] = cfg.saccade_vergence_deg;
  doc["gaze_box_deg"] = cfg.gaze_box_deg;
  doc["dropout_fraction"] = cfg.dropout_fraction;
  doc["head_sway_m"] = cfg.head_sway_m;
  doc["interocular_baseline_m"] = cfg.interocular_baseline_m;
  doc["participant"] = cfg.participant;
  doc["seed"] = cfg.seed;
  return doc.dump(2) + "\n";
}

}  // namespace gazekit
