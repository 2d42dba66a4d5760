#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

namespace gazekit {

enum class PcaMode { center_only, z_score };

/// Fitted principal components. Rows of `components` are the orthonormal
/// directions, sorted by descending eigenvalue. The sign convention makes
/// refits of identical data bit-identical: the largest-magnitude entry of
/// each component is positive (first such entry on ties).
struct PcaModel {
  Eigen::VectorXd mean;
  std::optional<Eigen::VectorXd> scale;  // set in z-score mode
  Eigen::MatrixXd components;            // k x d
  Eigen::VectorXd eigenvalues;           // descending, >= 0
  Eigen::VectorXd explained_variance_ratio;
};

struct ScreeRow {
  int component = 0;  // 1-based
  double eigenvalue = 0.0;
  double ratio = 0.0;
  double cumulative = 0.0;
};

PcaModel pca_fit(const Eigen::MatrixXd& x, PcaMode mode = PcaMode::center_only);

/// Scores of the first k components: (x - mean) [/ scale] * components^T.
Eigen::MatrixXd pca_transform(const PcaModel& model, const Eigen::MatrixXd& x, int k);

/// Inverse of pca_transform for k retained components.
Eigen::MatrixXd pca_inverse_transform(const PcaModel& model, const Eigen::MatrixXd& scores);

double cumulative_variance(const PcaModel& model, int k);

std::vector<ScreeRow> scree_table(const PcaModel& model);

}  // namespace gazekit
