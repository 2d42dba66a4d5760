#include "gazekit/divergence.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gazekit/error.hpp"
#include "gazekit/preprocess.hpp"

namespace gazekit {

double per_eye_difference(const GazeSample& sample) {
  if (!sample.valid_left || !sample.valid_right)
    fail(errc::invalid_sample, "per-eye difference needs both eyes valid");
  return distance(sample.left_gaze_dir, sample.right_gaze_dir);
}

double chord_to_degrees(double d) {
  const double clamped = std::clamp(d / 2.0, -1.0, 1.0);
  return 2.0 * std::asin(clamped) * 180.0 / std::numbers::pi;
}

std::vector<double> divergence_series(const Session& session) {
  std::vector<double> out;
  out.reserve(session.samples.size());
  for (const auto& s : session.samples) {
    if (s.valid_combined && s.valid_left && s.valid_right)
      out.push_back(per_eye_difference(s));
  }
  if (out.empty()) fail(errc::empty_after_filtering, "no valid samples in session");
  return out;
}

DivergenceStats divergence_stats(std::span<const double> series, double k) {
  if (series.empty()) fail(errc::empty_input, "divergence_stats of empty series");
  const auto fences = iqr_fences(series, k);
  const auto [kept, removed] = filter_outliers(series, fences);
  if (kept.empty()) fail(errc::all_removed, "all values fenced out");
  DivergenceStats st;
  st.min = kept.front();
  st.max = kept.front();
  double sum = 0.0;
  for (double v : kept) {
    st.min = std::min(st.min, v);
    st.max = std::max(st.max, v);
    sum += v;
  }
  st.mean = sum / static_cast<double>(kept.size());
  st.n_used = kept.size();
  st.n_removed_outlier = removed.size();
  return st;
}

SessionDivergence session_divergence(const Session& session, double k) {
  SessionDivergence out;
  const auto [clean, removed_invalid] = filter_invalid(session);
  if (clean.samples.empty())
    fail(errc::empty_after_filtering, "no valid samples in session");
  out.timestamps.reserve(clean.samples.size());
  out.series.reserve(clean.samples.size());
  for (const auto& s : clean.samples) {
    out.timestamps.push_back(s.timestamp_s);
    out.series.push_back(per_eye_difference(s));
  }
  out.stats = divergence_stats(out.series, k);
  out.stats.n_removed_invalid = removed_invalid;
  return out;
}

}  // namespace gazekit
