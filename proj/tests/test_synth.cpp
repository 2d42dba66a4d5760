#include <doctest.h>

#include <cmath>
#include <numbers>

#include "gazekit/divergence.hpp"
#include "gazekit/error.hpp"
#include "gazekit/ingest.hpp"
#include "gazekit/synth.hpp"

using namespace gazekit;

TEST_SUITE("synth") {

TEST_CASE("raised-cosine displacement profile") {
  CHECK(saccade_displacement(10.0, 0.05, 0.0) == 0.0);
  CHECK(saccade_displacement(10.0, 0.05, 0.05) == doctest::Approx(10.0));
  CHECK(saccade_displacement(10.0, 0.05, 0.025) == doctest::Approx(5.0));
  // Monotone non-decreasing.
  double prev = 0.0;
  for (int i = 0; i <= 50; ++i) {
    const double s = saccade_displacement(8.0, 0.04, 0.04 * i / 50.0);
    CHECK(s >= prev - 1e-12);
    prev = s;
  }
  // Peak velocity pi*A/(2D) at the midpoint, by central difference.
  const double a = 12.0, d = 0.06, h = 1e-6;
  const double v = (saccade_displacement(a, d, d / 2 + h) -
                    saccade_displacement(a, d, d / 2 - h)) / (2 * h);
  CHECK(v == doctest::Approx(std::numbers::pi * a / (2 * d)).epsilon(1e-6));
  CHECK_THROWS_AS(saccade_displacement(10.0, 0.05, -0.01), Error);
  CHECK_THROWS_AS(saccade_displacement(10.0, 0.05, 0.06), Error);
  CHECK_THROWS_AS(saccade_displacement(-1.0, 0.05, 0.0), Error);
}

TEST_CASE("36 s at 90 Hz yields 3240 samples") {
  SynthConfig cfg;
  cfg.seed = 42;
  const auto result = generate_session(cfg);
  CHECK(result.session.samples.size() == 3240);
  CHECK(result.session.rate_hz == 90.0);
}

TEST_CASE("sample count is round(duration * rate) across configs") {
  for (double duration : {0.5, 1.01, 7.77}) {
    for (double rate : {60.0, 90.0}) {
      SynthConfig cfg;
      cfg.duration_s = duration;
      cfg.rate_hz = rate;
      cfg.seed = 3;
      const auto result = generate_session(cfg);
      CHECK(result.session.samples.size() ==
            static_cast<std::size_t>(std::llround(duration * rate)));
    }
  }
}

TEST_CASE("same seed gives a byte-identical document") {
  SynthConfig cfg;
  cfg.duration_s = 3.0;
  cfg.seed = 1234;
  const auto a = generate_session(cfg);
  const auto b = generate_session(cfg);
  CHECK(write_nested_session(a.session) == write_nested_session(b.session));
  CHECK(write_intervals_csv(a.saccades) == write_intervals_csv(b.saccades));
  cfg.seed = 1235;
  const auto c = generate_session(cfg);
  CHECK(write_nested_session(a.session) != write_nested_session(c.session));
}

TEST_CASE("every emitted direction is unit length") {
  SynthConfig cfg;
  cfg.duration_s = 4.0;
  cfg.seed = 9;
  cfg.dropout_fraction = 0.0;
  const auto result = generate_session(cfg);
  for (const auto& s : result.session.samples) {
    CHECK(std::abs(s.left_gaze_dir.norm() - 1.0) < 1e-9);
    CHECK(std::abs(s.right_gaze_dir.norm() - 1.0) < 1e-9);
    CHECK(std::abs(s.combined_gaze_dir.norm() - 1.0) < 1e-9);
  }
}

TEST_CASE("amblyopic offset strictly raises mean divergence") {
  SynthConfig base;
  base.duration_s = 6.0;
  base.seed = 2024;
  const auto plain = generate_session(base);
  SynthConfig shifted = base;
  shifted.amblyopic_offset_deg = 2.0;
  const auto offset = generate_session(shifted);
  const auto stats_plain = divergence_stats(divergence_series(plain.session));
  const auto stats_offset = divergence_stats(divergence_series(offset.session));
  CHECK(stats_offset.mean > stats_plain.mean);
}

TEST_CASE("default-config saccade fraction sits inside [0.10, 0.30]") {
  for (std::uint64_t seed : {1u, 7u, 99u}) {
    SynthConfig cfg;
    cfg.seed = seed;
    const auto result = generate_session(cfg);
    const auto [saccade, rest] = class_balance(result.session);
    CHECK(saccade >= 0.10);
    CHECK(saccade <= 0.30);
    CHECK(rest == doctest::Approx(1.0 - saccade));
  }
}

TEST_CASE("noise-free, offset-free divergence is the exact vergence chord") {
  SynthConfig cfg;
  cfg.duration_s = 0.5;
  cfg.noise_deg_sigma = 0.0;
  cfg.amblyopic_offset_deg = 0.0;
  cfg.head_sway_m = 0.0;
  cfg.dropout_fraction = 0.0;
  cfg.convergence_m_range = {1.0, 1.0};
  cfg.fixation_ms_range = {60000.0, 60000.0};  // one long fixation
  cfg.seed = 4;
  const auto result = generate_session(cfg);
  const double b = cfg.interocular_baseline_m;
  const double expected = b / std::sqrt(1.0 + b * b / 4.0);
  for (const auto& s : result.session.samples)
    CHECK(per_eye_difference(s) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("sidecar intervals reproduce the embedded labels") {
  SynthConfig cfg;
  cfg.duration_s = 5.0;
  cfg.seed = 31;
  const auto result = generate_session(cfg);
  Session stripped = result.session;
  for (auto& s : stripped.samples) s.label.reset();
  const auto relabeled = apply_label_intervals(stripped, result.saccades);
  for (std::size_t i = 0; i < relabeled.samples.size(); ++i)
    CHECK(relabeled.samples[i].label == result.session.samples[i].label);
}

TEST_CASE("dropout fraction roughly matches the configuration") {
  SynthConfig cfg;
  cfg.duration_s = 30.0;
  cfg.dropout_fraction = 0.1;
  cfg.seed = 8;
  const auto result = generate_session(cfg);
  std::size_t invalid = 0;
  for (const auto& s : result.session.samples)
    if (!(s.valid_combined && s.valid_left && s.valid_right)) ++invalid;
  const double frac = static_cast<double>(invalid) /
                      static_cast<double>(result.session.samples.size());
  CHECK(frac == doctest::Approx(0.1).epsilon(0.35));
  // Invalid eyes carry zeroed data, never a positive pupil.
  for (const auto& s : result.session.samples) {
    if (!s.valid_left) CHECK(s.left_pupil_diameter == 0.0);
    if (!s.valid_right) CHECK(s.right_pupil_diameter == 0.0);
  }
}

TEST_CASE("labels cover exactly the closed kinematic intervals") {
  SynthConfig cfg;
  cfg.duration_s = 8.0;
  cfg.seed = 17;
  const auto result = generate_session(cfg);
  for (const auto& s : result.session.samples) {
    bool inside = false;
    for (const auto& iv : result.saccades)
      inside = inside || (iv.start_s <= s.timestamp_s && s.timestamp_s <= iv.end_s);
    CHECK(*s.label == inside);
  }
}

TEST_CASE("config validation") {
  SynthConfig cfg;
  cfg.duration_s = -1.0;
  CHECK_THROWS_AS(generate_session(cfg), Error);
  cfg = {};
  cfg.amplitude_deg_range = {5.0, 2.0};
  CHECK_THROWS_AS(generate_session(cfg), Error);
  cfg = {};
  cfg.dropout_fraction = 1.0;
  CHECK_THROWS_AS(generate_session(cfg), Error);
}

TEST_CASE("config json round trip") {
  SynthConfig cfg;
  cfg.duration_s = 12.0;
  cfg.amblyopic_offset_deg = 1.5;
  cfg.seed = 77;
  cfg.participant = "amblyopic";
  const auto parsed = synth_config_from_json(synth_config_to_json(cfg));
  CHECK(parsed.duration_s == cfg.duration_s);
  CHECK(parsed.amblyopic_offset_deg == cfg.amblyopic_offset_deg);
  CHECK(parsed.seed == cfg.seed);
  CHECK(parsed.participant == cfg.participant);
  // Defaults survive a sparse config.
  const auto sparse = synth_config_from_json(R"({"duration_s": 2.5})");
  CHECK(sparse.duration_s == 2.5);
  CHECK(sparse.rate_hz == 90.0);
  CHECK_THROWS_AS(synth_config_from_json("[]"), Error);
}

}  // TEST_SUITE
