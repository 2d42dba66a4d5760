#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gazekit/types.hpp"

namespace gazekit {

struct DivergenceStats {
  double min = 0.0;
  double max = 0.0;
  double mean = 0.0;
  std::size_t n_used = 0;
  std::size_t n_removed_invalid = 0;
  std::size_t n_removed_outlier = 0;
};

/// Euclidean distance between the two unit gaze directions, in [0, 2].
/// Equivalently 2*sin(theta/2) of the angular difference.
double per_eye_difference(const GazeSample& sample);

/// Angular form of the same distance, in degrees.
double chord_to_degrees(double distance);

/// Per-eye differences over all samples surviving validity filtering,
/// in time order.
std::vector<double> divergence_series(const Session& session);

/// min/max/mean after one pass of IQR fencing with multiplier k.
DivergenceStats divergence_stats(std::span<const double> series, double k = 3.0);

/// Convenience for the analyze stage: filters invalid samples, builds the
/// series, fences it, and fills the removal counters.
struct SessionDivergence {
  std::vector<double> timestamps;  // of the valid samples, pre-fencing
  std::vector<double> series;
  DivergenceStats stats;
};
SessionDivergence session_divergence(const Session& session, double k = 3.0);

}  // namespace gazekit
