#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "gazekit/svm.hpp"

namespace gazekit {

/// Feature rows with +1 (saccade) / -1 (not-saccade) labels.
struct Dataset {
  Eigen::MatrixXd x;
  Eigen::VectorXi y;
};

/// 2x2 confusion counts; rows = true class, cols = predicted, class order
/// [not-saccade, saccade].
struct Confusion {
  std::array<std::array<std::int64_t, 2>, 2> m{{{0, 0}, {0, 0}}};
  std::int64_t total() const { return m[0][0] + m[0][1] + m[1][0] + m[1][1]; }
};

struct EvalReport {
  Confusion confusion;
  double accuracy = 0.0;
  double precision_w = 0.0;
  double recall_w = 0.0;
  double f1_w = 0.0;
};

enum class CvMetric { accuracy, weighted_f1 };

struct CvResult {
  double mean_accuracy = 0.0;
  std::vector<double> fold_accuracy;
  double mean_f1w = 0.0;
  std::vector<double> fold_f1w;
};

struct GridRow {
  double C = 0.0;
  double gamma = 0.0;
  double mean_accuracy = 0.0;
  std::vector<double> fold_accuracy;
  double mean_f1w = 0.0;
};

struct GridResult {
  std::vector<GridRow> rows;  // C-major, gamma-minor, in input order
  double best_C = 0.0;
  double best_gamma = 0.0;
};

/// Seeded shuffle split with |train| = round(ratio * n). Stratified mode
/// preserves per-class proportions within one sample. Returned index lists
/// are sorted ascending.
std::pair<std::vector<int>, std::vector<int>> split_indices(
    const Eigen::VectorXi& labels, double ratio, std::uint64_t seed, bool stratified);

std::pair<Dataset, Dataset> train_test_split(const Dataset& data, double ratio,
                                             std::uint64_t seed, bool stratified);

/// k disjoint folds covering 0..n-1, sizes differing by at most one.
/// Stratified mode deals each class round-robin with a rotating offset.
std::vector<std::vector<int>> kfold_indices(int n, int k, std::uint64_t seed,
                                            bool stratified,
                                            const Eigen::VectorXi& labels);

CvResult cross_validate(const Dataset& train, const SvmParams& params, int k,
                        std::uint64_t seed, bool stratified = true);

GridResult grid_search(const Dataset& train, const std::vector<double>& cs,
                       const std::vector<double>& gammas, int k, std::uint64_t seed,
                       const SvmParams& base, CvMetric metric = CvMetric::accuracy,
                       bool stratified = true);

/// Default grid: C in {0.1, 1, 10, 100}; gamma in {0.001, 0.01, 0.1, 1,
/// 1/(d*var(X))} with var taken over all matrix entries.
std::pair<std::vector<double>, std::vector<double>> default_grid(const Eigen::MatrixXd& x);

Confusion confusion_matrix(const Eigen::VectorXi& y_true, const Eigen::VectorXi& y_pred);

EvalReport weighted_metrics(const Confusion& confusion);

struct GridBounds {
  double xmin = 0.0, xmax = 0.0, ymin = 0.0, ymax = 0.0;
};

/// resolution x resolution decision values over a uniform grid, row-major
/// with x varying fastest. The model must be trained on exactly 2 features.
struct DecisionGrid {
  GridBounds bounds;
  int resolution = 0;
  std::vector<double> values;
  double x_at(int ix) const;
  double y_at(int iy) const;
};

DecisionGrid decision_grid(const SvmModel& model2d, const GridBounds& bounds,
                           int resolution);

}  // namespace gazekit
