#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gazekit/types.hpp"

namespace gazekit {

/// Generator settings for labeled fixation/saccade sessions. Saccade
/// durations follow the main-sequence line duration_ms = a * amplitude_deg
/// + b with standard oculomotor defaults. amblyopic_offset_deg > 0 rotates
/// the left eye by a fixed deviation plus jitter (15% of the offset).
struct SynthConfig {
  double duration_s = 36.0;
  double rate_hz = 90.0;
  std::pair<double, double> fixation_ms_range{200.0, 600.0};
  std::pair<double, double> amplitude_deg_range{2.0, 20.0};
  double main_sequence_ms_per_deg = 2.2;
  double main_sequence_intercept_ms = 21.0;
  double noise_deg_sigma = 0.1;
  double amblyopic_offset_deg = 0.0;
  std::pair<double, double> convergence_m_range{0.6, 1.1};
  // Peak intrasaccadic vergence transient: the eyes diverge transiently
  // mid-flight, so the instantaneous two-ray convergence distance spikes.
  double saccade_vergence_deg = 2.5;
  double gaze_box_deg = 20.0;
  double dropout_fraction = 0.02;
  double head_sway_m = 0.002;
  double interocular_baseline_m = 0.063;
  std::string participant = "synthetic";
  std::uint64_t seed = 1;
};

struct SynthResult {
  Session session;                      // fully labeled
  std::vector<LabelInterval> saccades;  // exact kinematic intervals
};

/// Raised-cosine position profile: s(t) = A * (1 - cos(pi t / D)) / 2.
/// s(0) = 0, s(D) = A, peak velocity pi*A/(2D) at the midpoint.
double saccade_displacement(double amplitude_deg, double duration_s, double t);

SynthResult generate_session(const SynthConfig& config);

/// JSON (de)serialization of the config; absent keys keep their defaults.
SynthConfig synth_config_from_json(std::string_view text);
std::string synth_config_to_json(const SynthConfig& config);

}  // namespace gazekit
