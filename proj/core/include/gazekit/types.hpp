#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

namespace gazekit {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double norm() const { return std::sqrt(x * x + y * y + z * z); }
  Vec3 normalized() const {
    const double n = norm();
    return {x / n, y / n, z / n};
  }
};

inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator*(double s, const Vec3& v) { return {s * v.x, s * v.y, s * v.z}; }
inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline double distance(const Vec3& a, const Vec3& b) { return (a - b).norm(); }

/// One flattened eye-tracker frame: the 25 tabular features plus validity
/// flags, a timestamp and an optional saccade label.
struct GazeSample {
  double timestamp_s = 0.0;

  Vec3 left_gaze_dir;
  Vec3 left_gaze_origin;
  double left_pupil_diameter = 0.0;
  Vec2 left_position_guide;

  Vec3 right_gaze_dir;
  Vec3 right_gaze_origin;
  double right_pupil_diameter = 0.0;
  Vec2 right_position_guide;

  Vec3 combined_gaze_dir;
  Vec3 combined_gaze_origin;
  double convergence_distance_m = 0.0;

  bool valid_combined = false;
  bool valid_left = false;
  bool valid_right = false;

  std::optional<bool> label;
};

struct Session {
  std::string participant_id;
  double rate_hz = 0.0;  // nominal sampling rate
  std::vector<GazeSample> samples;
  std::string source;
};

/// Closed time interval [start_s, end_s] during which a saccade occurred.
struct LabelInterval {
  double start_s = 0.0;
  double end_s = 0.0;
};

}  // namespace gazekit
