#include "gazekit/stats.hpp"

#include <cmath>

#include "gazekit/error.hpp"

namespace gazekit {

namespace {

struct CentralMoments {
  double m2, m3, m4;
};

CentralMoments central_moments(std::span<const double> v) {
  const double n = static_cast<double>(v.size());
  double mean = 0.0;
  for (double x : v) mean += x;
  mean /= n;
  CentralMoments m{0.0, 0.0, 0.0};
  for (double x : v) {
    const double d = x - mean;
    const double d2 = d * d;
    m.m2 += d2;
    m.m3 += d2 * d;
    m.m4 += d2 * d2;
  }
  m.m2 /= n;
  m.m3 /= n;
  m.m4 /= n;
  return m;
}

}  // namespace

std::pair<double, double> moments(std::span<const double> values) {
  if (values.size() < 3) fail(errc::too_few_samples, "moments need n >= 3");
  const auto m = central_moments(values);
  if (m.m2 <= 0.0) fail(errc::zero_variance, "moments need nonzero variance");
  const double g1 = m.m3 / std::pow(m.m2, 1.5);
  const double g2 = m.m4 / (m.m2 * m.m2) - 3.0;
  return {g1, g2};
}

NormalityReport dagostino_k2(std::span<const double> values) {
  if (values.size() < 20) fail(errc::too_few_samples, "k2 test needs n >= 20");
  const auto [g1, g2] = moments(values);
  const double n = static_cast<double>(values.size());

  // Skewness transform (D'Agostino 1970).
  double y = g1 * std::sqrt((n + 1.0) * (n + 3.0) / (6.0 * (n - 2.0)));
  const double beta2 = 3.0 * (n * n + 27.0 * n - 70.0) * (n + 1.0) * (n + 3.0) /
                       ((n - 2.0) * (n + 5.0) * (n + 7.0) * (n + 9.0));
  const double w2 = -1.0 + std::sqrt(2.0 * (beta2 - 1.0));
  const double delta = 1.0 / std::sqrt(0.5 * std::log(w2));
  const double alpha = std::sqrt(2.0 / (w2 - 1.0));
  if (y == 0.0) y = 1.0;  // transform is undefined at exactly zero skew
  const double ya = y / alpha;
  const double z1 = delta * std::log(ya + std::sqrt(ya * ya + 1.0));

  // Kurtosis transform (Anscombe-Glynn 1983), on b2 = g2 + 3.
  const double b2 = g2 + 3.0;
  const double eb2 = 3.0 * (n - 1.0) / (n + 1.0);
  const double vb2 = 24.0 * n * (n - 2.0) * (n - 3.0) /
                     ((n + 1.0) * (n + 1.0) * (n + 3.0) * (n + 5.0));
  const double x = (b2 - eb2) / std::sqrt(vb2);
  const double sqrtbeta1 = 6.0 * (n * n - 5.0 * n + 2.0) / ((n + 7.0) * (n + 9.0)) *
                           std::sqrt(6.0 * (n + 3.0) * (n + 5.0) /
                                     (n * (n - 2.0) * (n - 3.0)));
  const double a = 6.0 + 8.0 / sqrtbeta1 *
                             (2.0 / sqrtbeta1 +
                              std::sqrt(1.0 + 4.0 / (sqrtbeta1 * sqrtbeta1)));
  const double term1 = 1.0 - 2.0 / (9.0 * a);
  const double denom = 1.0 + x * std::sqrt(2.0 / (a - 4.0));
  const double term2 =
      std::copysign(std::cbrt((1.0 - 2.0 / a) / std::fabs(denom)), denom);
  const double z2 = (term1 - term2) / std::sqrt(2.0 / (9.0 * a));

  NormalityReport r;
  r.n = values.size();
  r.g1 = g1;
  r.g2 = g2;
  r.z1 = z1;
  r.z2 = z2;
  r.k2 = z1 * z1 + z2 * z2;
  const double p = std::exp(-r.k2 / 2.0);  // chi-square survival, 2 dof
  r.p = p < 1e-300 ? 0.0 : p;
  return r;
}

}  // namespace gazekit
