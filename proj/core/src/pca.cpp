#include "gazekit/pca.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "gazekit/error.hpp"

namespace gazekit {

PcaModel pca_fit(const Eigen::MatrixXd& x, PcaMode mode) {
  const auto n = x.rows();
  const auto d = x.cols();
  if (n < 2) fail(errc::too_few_rows, "pca_fit needs at least 2 rows");
  if (d < 1) fail(errc::dimension_mismatch, "pca_fit needs at least 1 column");

  PcaModel model;
  model.mean = x.colwise().mean();
  Eigen::MatrixXd centered = x.rowwise() - model.mean.transpose();

  if (mode == PcaMode::z_score) {
    Eigen::VectorXd sd(d);
    for (Eigen::Index j = 0; j < d; ++j) {
      const double var = centered.col(j).squaredNorm() / static_cast<double>(n - 1);
      if (var <= 0.0)
        fail(errc::zero_variance_column,
             "column " + std::to_string(j) + " has zero variance");
      sd[j] = std::sqrt(var);
    }
    model.scale = sd;
    centered.array().rowwise() /= sd.transpose().array();
  }

  Eigen::MatrixXd cov =
      centered.transpose() * centered / static_cast<double>(n - 1);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(cov);
  if (solver.info() != Eigen::Success)
    fail(errc::zero_variance, "eigendecomposition failed");

  // Eigen returns ascending eigenvalues; flip to descending.
  Eigen::VectorXd evals = solver.eigenvalues().reverse();
  Eigen::MatrixXd comps = solver.eigenvectors().rowwise().reverse().transpose();
  for (Eigen::Index i = 0; i < evals.size(); ++i)
    evals[i] = std::max(evals[i], 0.0);

  // Deterministic sign: largest-magnitude entry of each component positive.
  for (Eigen::Index i = 0; i < comps.rows(); ++i) {
    Eigen::Index arg = 0;
    comps.row(i).cwiseAbs().maxCoeff(&arg);
    if (comps(i, arg) < 0.0) comps.row(i) = -comps.row(i);
  }

  model.components = std::move(comps);
  model.eigenvalues = evals;
  const double total = evals.sum();
  model.explained_variance_ratio =
      total > 0.0 ? Eigen::VectorXd(evals / total)
                  : Eigen::VectorXd(Eigen::VectorXd::Zero(evals.size()));
  return model;
}

Eigen::MatrixXd pca_transform(const PcaModel& model, const Eigen::MatrixXd& x, int k) {
  if (x.cols() != model.mean.size())
    fail(errc::dimension_mismatch, "pca_transform: column count mismatch");
  if (k < 1 || k > model.components.rows())
    fail(errc::k_out_of_range, "pca_transform: k = " + std::to_string(k));
  Eigen::MatrixXd centered = x.rowwise() - model.mean.transpose();
  if (model.scale)
    centered.array().rowwise() /= model.scale->transpose().array();
  return centered * model.components.topRows(k).transpose();
}

Eigen::MatrixXd pca_inverse_transform(const PcaModel& model,
                                      const Eigen::MatrixXd& scores) {
  const auto k = scores.cols();
  if (k < 1 || k > model.components.rows())
    fail(errc::k_out_of_range, "pca_inverse_transform: k = " + std::to_string(k));
  Eigen::MatrixXd x = scores * model.components.topRows(k);
  if (model.scale)
    x.array().rowwise() *= model.scale->transpose().array();
  return x.rowwise() + model.mean.transpose();
}

double cumulative_variance(const PcaModel& model, int k) {
  if (k < 1 || k > model.explained_variance_ratio.size())
    fail(errc::k_out_of_range, "cumulative_variance: k = " + std::to_string(k));
  return model.explained_variance_ratio.head(k).sum();
}

std::vector<ScreeRow> scree_table(const PcaModel& model) {
  std::vector<ScreeRow> rows;
  rows.reserve(static_cast<std::size_t>(model.eigenvalues.size()));
  double cum = 0.0;
  for (Eigen::Index i = 0; i < model.eigenvalues.size(); ++i) {
    cum += model.explained_variance_ratio[i];
    rows.push_back({static_cast<int>(i) + 1, model.eigenvalues[i],
                    model.explained_variance_ratio[i], cum});
  }
  return rows;
}

}  // namespace gazekit
