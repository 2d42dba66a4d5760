#include "gazekit/pipeline.hpp"

#include <json.hpp>

#include "gazekit/divergence.hpp"
#include "gazekit/error.hpp"
#include "gazekit/ingest.hpp"
#include "gazekit/preprocess.hpp"

namespace gazekit {

using nlohmann::json;

Session pool_sessions(std::span<const Session> sessions) {
  Session pooled;
  pooled.participant_id = "pooled";
  pooled.source = "pool of " + std::to_string(sessions.size()) + " sessions";
  double offset = 0.0;
  for (const auto& session : sessions) {
    const auto [clean, removed] = filter_invalid(session);
    (void)removed;
    if (pooled.rate_hz <= 0.0) pooled.rate_hz = session.rate_hz;
    if (clean.samples.empty()) continue;
    const double step = session.rate_hz > 0.0 ? 1.0 / session.rate_hz : 1.0;
    const double base = clean.samples.front().timestamp_s;
    for (const auto& s : clean.samples) {
      GazeSample shifted = s;
      shifted.timestamp_s = offset + (s.timestamp_s - base);
      pooled.samples.push_back(shifted);
    }
    offset = pooled.samples.back().timestamp_s + step;
  }
  if (pooled.samples.empty())
    fail(errc::empty_after_filtering, "no valid samples in any session");
  if (pooled.rate_hz <= 0.0) pooled.rate_hz = 90.0;
  return pooled;
}

std::pair<Session, std::size_t> filter_divergence_outliers(const Session& clean,
                                                           double k) {
  const auto series = divergence_series(clean);
  if (series.size() != clean.samples.size())
    fail(errc::invalid_sample, "outlier filtering needs a validity-filtered session");
  const auto fences = iqr_fences(series, k);
  Session out = clean;
  out.samples.clear();
  for (std::size_t i = 0; i < series.size(); ++i)
    if (series[i] >= fences.lo && series[i] <= fences.hi)
      out.samples.push_back(clean.samples[i]);
  return {std::move(out), clean.samples.size() - out.samples.size()};
}

Dataset dataset_from_session(const Session& session) {
  return {feature_matrix(session), labels_pm1(session)};
}

Dataset dataset_from_sessions(std::span<const Session> sessions) {
  return dataset_from_session(pool_sessions(sessions));
}

TrainOutput train_pipeline(const Dataset& clean, const PipelineOptions& options) {
  TrainOutput out;
  auto [train_idx, test_idx] =
      split_indices(clean.y, options.train_ratio, options.seed, options.stratified);
  Dataset train, test;
  train.x.resize(static_cast<Eigen::Index>(train_idx.size()), clean.x.cols());
  train.y.resize(static_cast<Eigen::Index>(train_idx.size()));
  for (std::size_t i = 0; i < train_idx.size(); ++i) {
    train.x.row(static_cast<Eigen::Index>(i)) = clean.x.row(train_idx[i]);
    train.y[static_cast<Eigen::Index>(i)] = clean.y[train_idx[i]];
  }
  test.x.resize(static_cast<Eigen::Index>(test_idx.size()), clean.x.cols());
  test.y.resize(static_cast<Eigen::Index>(test_idx.size()));
  for (std::size_t i = 0; i < test_idx.size(); ++i) {
    test.x.row(static_cast<Eigen::Index>(i)) = clean.x.row(test_idx[i]);
    test.y[static_cast<Eigen::Index>(i)] = clean.y[test_idx[i]];
  }
  out.train_index = std::move(train_idx);
  out.test_index = std::move(test_idx);

  const PcaModel pca = pca_fit(train.x, options.mode);
  if (options.pcs < 1 || options.pcs > pca.components.rows())
    fail(errc::k_out_of_range, "pcs = " + std::to_string(options.pcs));
  Dataset reduced{pca_transform(pca, train.x, options.pcs), train.y};

  SvmParams base;
  base.tol = options.tol;
  base.cache_mb = options.cache_mb;
  if (options.weights == WeightScheme::balanced) {
    const auto n = static_cast<double>(train.y.size());
    double pos = 0.0;
    for (Eigen::Index i = 0; i < train.y.size(); ++i)
      if (train.y[i] > 0) ++pos;
    base.class_weight_pos = n / (2.0 * pos);
    base.class_weight_neg = n / (2.0 * (n - pos));
  }

  std::vector<double> cs = options.cs;
  std::vector<double> gammas = options.gammas;
  if (cs.empty() || gammas.empty()) {
    const auto [dcs, dgammas] = default_grid(reduced.x);
    if (cs.empty()) cs = dcs;
    if (gammas.empty()) gammas = dgammas;
  }

  out.grid = grid_search(reduced, cs, gammas, options.folds, options.seed, base,
                         options.metric, options.stratified);

  SvmParams best = base;
  best.C = out.grid.best_C;
  best.gamma = out.grid.best_gamma;
  out.model.mode = options.mode;
  out.model.pcs = options.pcs;
  out.model.pca = pca;
  out.model.svm = svm_train(reduced.x, reduced.y, best);
  out.train = std::move(train);
  out.test = std::move(test);
  return out;
}

Eigen::VectorXi predict_labels(const SaccadeModel& model, const Eigen::MatrixXd& x) {
  const Eigen::MatrixXd scores = pca_transform(model.pca, x, model.pcs);
  const Eigen::VectorXd dec = decision_values(model.svm, scores);
  Eigen::VectorXi pred(dec.size());
  for (Eigen::Index i = 0; i < dec.size(); ++i) pred[i] = dec[i] > 0.0 ? 1 : -1;
  return pred;
}

EvalReport evaluate_model(const SaccadeModel& model, const Dataset& raw) {
  const Eigen::VectorXi pred = predict_labels(model, raw.x);
  return weighted_metrics(confusion_matrix(raw.y, pred));
}

namespace {

json vector_to_json(const Eigen::VectorXd& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v[i]);
  return a;
}

json matrix_to_json(const Eigen::MatrixXd& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Eigen::VectorXd vector_from_json(const json& a, const char* what) {
  if (!a.is_array()) fail(errc::malformed_document, std::string(what) + " not an array");
  Eigen::VectorXd v(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_number())
      fail(errc::malformed_document, std::string(what) + " has a non-number");
    v[static_cast<Eigen::Index>(i)] = a[i].get<double>();
  }
  return v;
}

Eigen::MatrixXd matrix_from_json(const json& a, const char* what) {
  if (!a.is_array()) fail(errc::malformed_document, std::string(what) + " not an array");
  const std::size_t rows = a.size();
  std::size_t cols = 0;
  if (rows > 0) {
    if (!a[0].is_array())
      fail(errc::malformed_document, std::string(what) + " rows must be arrays");
    cols = a[0].size();
  }
  Eigen::MatrixXd m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!a[i].is_array() || a[i].size() != cols)
      fail(errc::malformed_document, std::string(what) + " is ragged");
    for (std::size_t j = 0; j < cols; ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          a[i][j].get<double>();
  }
  return m;
}

constexpr const char* kModelFormat = "gazekit-model/1";

}  // namespace

std::string save_model(const SaccadeModel& model) {
  json doc;
  doc["format"] = kModelFormat;
  doc["mode"] = model.mode == PcaMode::z_score ? "zscore" : "center";
  doc["pcs"] = model.pcs;

  json pca;
  pca["mean"] = vector_to_json(model.pca.mean);
  if (model.pca.scale) pca["scale"] = vector_to_json(*model.pca.scale);
  pca["components"] = matrix_to_json(model.pca.components);
  pca["eigenvalues"] = vector_to_json(model.pca.eigenvalues);
  pca["explained_variance_ratio"] = vector_to_json(model.pca.explained_variance_ratio);
  doc["pca"] = std::move(pca);

  const auto& p = model.svm.params;
  json svm;
  svm["C"] = p.C;
  svm["gamma"] = p.gamma;
  svm["class_weight_pos"] = p.class_weight_pos;
  svm["class_weight_neg"] = p.class_weight_neg;
  svm["tol"] = p.tol;
  svm["max_passes"] = p.max_passes;
  svm["bias"] = model.svm.bias;
  svm["support_vectors"] = matrix_to_json(model.svm.support_vectors);
  svm["dual_coef"] = vector_to_json(model.svm.dual_coef);
  svm["support_indices"] = model.svm.support_indices;
  svm["iterations"] = model.svm.meta.iterations;
  svm["objective"] = model.svm.meta.objective;
  svm["converged"] = model.svm.meta.converged;
  doc["svm"] = std::move(svm);
  return doc.dump(2) + "\n";
}

SaccadeModel load_model(std::string_view text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded() || !doc.is_object())
    fail(errc::malformed_document, "model file is not a JSON object");
  if (!doc.contains("format") || doc["format"] != kModelFormat)
    fail(errc::malformed_document, "model file format marker missing or unknown");

  SaccadeModel model;
  model.mode = doc.value("mode", "center") == std::string("zscore")
                   ? PcaMode::z_score
                   : PcaMode::center_only;
  model.pcs = doc.at("pcs").get<int>();

  const json& pca = doc.at("pca");
  model.pca.mean = vector_from_json(pca.at("mean"), "pca.mean");
  if (pca.contains("scale"))
    model.pca.scale = vector_from_json(pca.at("scale"), "pca.scale");
  model.pca.components = matrix_from_json(pca.at("components"), "pca.components");
  model.pca.eigenvalues = vector_from_json(pca.at("eigenvalues"), "pca.eigenvalues");
  model.pca.explained_variance_ratio = vector_from_json(
      pca.at("explained_variance_ratio"), "pca.explained_variance_ratio");

  const json& svm = doc.at("svm");
  model.svm.params.C = svm.at("C").get<double>();
  model.svm.params.gamma = svm.at("gamma").get<double>();
  model.svm.params.class_weight_pos = svm.at("class_weight_pos").get<double>();
  model.svm.params.class_weight_neg = svm.at("class_weight_neg").get<double>();
  model.svm.params.tol = svm.at("tol").get<double>();
  model.svm.params.max_passes = svm.at("max_passes").get<std::int64_t>();
  model.svm.bias = svm.at("bias").get<double>();
  model.svm.support_vectors =
      matrix_from_json(svm.at("support_vectors"), "svm.support_vectors");
  model.svm.dual_coef = vector_from_json(svm.at("dual_coef"), "svm.dual_coef");
  if (svm.contains("support_indices"))
    model.svm.support_indices = svm.at("support_indices").get<std::vector<int>>();
  model.svm.meta.iterations = svm.value("iterations", std::int64_t{0});
  model.svm.meta.objective = svm.value("objective", 0.0);
  model.svm.meta.converged = svm.value("converged", true);
  model.svm.meta.n_support = static_cast<int>(model.svm.dual_coef.size());
  return model;
}

}  // namespace gazekit
