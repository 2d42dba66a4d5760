#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "gazekit/types.hpp"

namespace gazekit {

/// Tukey fences around the interquartile range. k = 3 marks the
/// conventional "extreme outlier" multiplier.
struct IqrFences {
  double q1 = 0.0;
  double q3 = 0.0;
  double iqr = 0.0;
  double k = 3.0;
  double lo = 0.0;
  double hi = 0.0;
};

/// Drop every sample whose combined/left/right validity flags are not all
/// true. Order is preserved.
std::pair<Session, std::size_t> filter_invalid(const Session& session);

/// Quantile at position (n-1)*p with linear interpolation between order
/// statistics. values need not be sorted.
double quantile(std::span<const double> values, double p);

IqrFences iqr_fences(std::span<const double> values, double k = 3.0);

/// Keep values inside [lo, hi] (closed fences); removed_indices ascending.
std::pair<std::vector<double>, std::vector<std::size_t>> filter_outliers(
    std::span<const double> values, const IqrFences& fences);

}  // namespace gazekit
