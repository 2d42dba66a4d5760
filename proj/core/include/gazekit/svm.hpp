#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

namespace gazekit {

struct SvmParams {
  double C = 1.0;
  double gamma = 1.0;
  double class_weight_pos = 1.0;  // multiplies C for y = +1
  double class_weight_neg = 1.0;  // multiplies C for y = -1
  double tol = 1e-3;              // KKT stopping tolerance
  std::int64_t max_passes = 10'000'000;  // pair-update bound
  double cache_mb = 256.0;        // kernel row cache budget
};

struct TrainMeta {
  std::int64_t iterations = 0;
  double objective = 0.0;  // dual objective at the returned solution
  bool converged = true;
  int n_support = 0;
};

/// Soft-margin RBF SVM in dual form. dual_coef[i] = alpha_i * y_i, nonzero
/// for every stored support vector; sum(dual_coef) == 0 up to tolerance.
struct SvmModel {
  Eigen::MatrixXd support_vectors;   // m x d
  Eigen::VectorXd dual_coef;         // m
  std::vector<int> support_indices;  // rows of the training matrix
  double bias = 0.0;
  SvmParams params;
  TrainMeta meta;
};

/// exp(-gamma * |x - y|^2), in (0, 1].
double rbf_kernel(const Eigen::VectorXd& x, const Eigen::VectorXd& y, double gamma);

/// SMO on the dual problem. Working pairs are chosen by maximal KKT
/// violation; training stops when the largest violation falls below tol or
/// max_passes updates have been made (the model is still returned, with
/// meta.converged = false).
SvmModel svm_train(const Eigen::MatrixXd& x, const Eigen::VectorXi& y,
                   const SvmParams& params);

double decision_value(const SvmModel& model, const Eigen::VectorXd& x);

/// decision_value applied to every row of x.
Eigen::VectorXd decision_values(const SvmModel& model, const Eigen::MatrixXd& x);

/// true = saccade iff decision_value > 0; an exact zero maps to the
/// majority (not-saccade) class.
bool predict(const SvmModel& model, const Eigen::VectorXd& x);

}  // namespace gazekit
