#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gazekit/model_select.hpp"
#include "gazekit/pca.hpp"
#include "gazekit/types.hpp"

namespace gazekit {

enum class WeightScheme { balanced, none };

struct PipelineOptions {
  int pcs = 4;
  int folds = 4;
  double train_ratio = 0.75;
  bool stratified = true;
  PcaMode mode = PcaMode::center_only;
  WeightScheme weights = WeightScheme::balanced;
  CvMetric metric = CvMetric::accuracy;
  std::vector<double> cs;      // empty -> default grid
  std::vector<double> gammas;  // empty -> default grid
  std::uint64_t seed = 1;
  double tol = 1e-3;
  double cache_mb = 256.0;
};

/// PCA reduction plus the fitted classifier, serialized together so that a
/// model file is self-contained.
struct SaccadeModel {
  PcaMode mode = PcaMode::center_only;
  int pcs = 4;
  PcaModel pca;
  SvmModel svm;
};

struct TrainOutput {
  SaccadeModel model;
  GridResult grid;
  Dataset train;                 // raw (pre-PCA) features, post-clean
  Dataset test;                  // raw held-out features
  std::vector<int> train_index;  // rows of the input dataset
  std::vector<int> test_index;
};

/// Validity-filter the sessions and concatenate them on one continuous
/// timeline (each session is shifted past the end of the previous one, so
/// pooled timestamps stay strictly increasing).
Session pool_sessions(std::span<const Session> sessions);

/// Optional extra cleaning step: drop samples whose per-eye divergence
/// falls outside the IQR fences with multiplier k. The default pipeline
/// fences only the divergence analysis, not the classifier input.
std::pair<Session, std::size_t> filter_divergence_outliers(const Session& clean,
                                                           double k);

/// Feature/label view of an already-cleaned session.
Dataset dataset_from_session(const Session& session);

/// pool_sessions + dataset_from_session.
Dataset dataset_from_sessions(std::span<const Session> sessions);

/// Split, fit PCA on the training part, grid-search with k-fold CV, refit
/// the best cell on the full training part.
TrainOutput train_pipeline(const Dataset& clean, const PipelineOptions& options);

Eigen::VectorXi predict_labels(const SaccadeModel& model, const Eigen::MatrixXd& x);

EvalReport evaluate_model(const SaccadeModel& model, const Dataset& raw);

/// Text round-trip preserves decision values to 1e-12 (doubles are written
/// with full round-trip precision).
std::string save_model(const SaccadeModel& model);
SaccadeModel load_model(std::string_view text);

}  // namespace gazekit
