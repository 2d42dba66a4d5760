#include "gazekit/preprocess.hpp"

#include <algorithm>
#include <cmath>

#include "gazekit/error.hpp"

namespace gazekit {

std::pair<Session, std::size_t> filter_invalid(const Session& session) {
  Session out;
  out.participant_id = session.participant_id;
  out.rate_hz = session.rate_hz;
  out.source = session.source;
  out.samples.reserve(session.samples.size());
  for (const auto& s : session.samples) {
    if (s.valid_combined && s.valid_left && s.valid_right) out.samples.push_back(s);
  }
  const std::size_t removed = session.samples.size() - out.samples.size();
  return {std::move(out), removed};
}

double quantile(std::span<const double> values, double p) {
  if (values.empty()) fail(errc::empty_input, "quantile of empty list");
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const double pos = static_cast<double>(sorted.size() - 1) * p;
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  if (lo + 1 >= sorted.size()) return sorted.back();
  const double frac = pos - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

IqrFences iqr_fences(std::span<const double> values, double k) {
  if (values.empty()) fail(errc::empty_input, "iqr_fences of empty list");
  if (k < 0.0) fail(errc::invalid_config, "fence multiplier must be >= 0");
  IqrFences f;
  f.q1 = quantile(values, 0.25);
  f.q3 = quantile(values, 0.75);
  f.iqr = f.q3 - f.q1;
  f.k = k;
  f.lo = f.q1 - k * f.iqr;
  f.hi = f.q3 + k * f.iqr;
  return f;
}

std::pair<std::vector<double>, std::vector<std::size_t>> filter_outliers(
    std::span<const double> values, const IqrFences& fences) {
  std::vector<double> kept;
  std::vector<std::size_t> removed;
  kept.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] >= fences.lo && values[i] <= fences.hi) {
      kept.push_back(values[i]);
    } else {
      removed.push_back(i);
    }
  }
  return {std::move(kept), std::move(removed)};
}

}  // namespace gazekit
