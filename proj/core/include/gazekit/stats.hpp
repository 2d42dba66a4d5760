#pragma once

#include <cstddef>
#include <span>
#include <utility>

namespace gazekit {

/// Omnibus normality result: skewness and kurtosis z-scores combined into
/// k2 = z1^2 + z2^2, chi-square with 2 dof, so p = exp(-k2/2).
struct NormalityReport {
  std::size_t n = 0;
  double g1 = 0.0;  // sample skewness m3 / m2^1.5
  double g2 = 0.0;  // sample excess kurtosis m4 / m2^2 - 3
  double z1 = 0.0;
  double z2 = 0.0;
  double k2 = 0.0;
  double p = 1.0;
};

/// Sample skewness and excess kurtosis from biased central moments.
/// Requires n >= 3 and nonzero variance.
std::pair<double, double> moments(std::span<const double> values);

/// D'Agostino's K^2 omnibus test. Uses the D'Agostino (1970) skewness
/// transform and the Anscombe-Glynn (1983) kurtosis transform; requires
/// n >= 20. p below 1e-300 is reported as 0.
NormalityReport dagostino_k2(std::span<const double> values);

}  // namespace gazekit
