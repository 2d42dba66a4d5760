#include "gazekit/model_select.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "gazekit/error.hpp"
#include "gazekit/rng.hpp"

namespace gazekit {

namespace {

int class_of(int label) { return label > 0 ? 1 : 0; }

Dataset take_rows(const Dataset& data, const std::vector<int>& idx) {
  Dataset out;
  out.x.resize(static_cast<Eigen::Index>(idx.size()), data.x.cols());
  out.y.resize(static_cast<Eigen::Index>(idx.size()));
  for (std::size_t r = 0; r < idx.size(); ++r) {
    out.x.row(static_cast<Eigen::Index>(r)) = data.x.row(idx[r]);
    out.y[static_cast<Eigen::Index>(r)] = data.y[idx[r]];
  }
  return out;
}

void check_both_classes(const std::vector<int>& idx, const Eigen::VectorXi& labels,
                        errc code, const char* what) {
  bool pos = false, neg = false;
  for (int i : idx) (labels[i] > 0 ? pos : neg) = true;
  if (!pos || !neg) fail(code, what);
}

}  // namespace

std::pair<std::vector<int>, std::vector<int>> split_indices(
    const Eigen::VectorXi& labels, double ratio, std::uint64_t seed, bool stratified) {
  const int n = static_cast<int>(labels.size());
  if (ratio <= 0.0 || ratio >= 1.0)
    fail(errc::invalid_config, "split ratio must be in (0, 1)");
  if (n < 2) fail(errc::too_few_samples, "split needs at least 2 samples");
  const int m = static_cast<int>(std::llround(ratio * n));

  Rng rng(seed);
  std::vector<int> train, test;

  if (!stratified) {
    std::vector<int> idx(static_cast<std::size_t>(n));
    std::iota(idx.begin(), idx.end(), 0);
    rng.shuffle(idx);
    train.assign(idx.begin(), idx.begin() + m);
    test.assign(idx.begin() + m, idx.end());
  } else {
    std::array<std::vector<int>, 2> by_class;
    for (int i = 0; i < n; ++i) by_class[class_of(labels[i])].push_back(i);

    // Per-class train counts: floor allocation, remainders to the classes
    // with the largest fractional parts (ties to the smaller class index).
    std::array<int, 2> want{};
    std::array<double, 2> frac{};
    int assigned = 0;
    for (int c = 0; c < 2; ++c) {
      const double exact = ratio * static_cast<double>(by_class[c].size());
      want[c] = static_cast<int>(std::floor(exact));
      frac[c] = exact - want[c];
      assigned += want[c];
    }
    for (int extra = m - assigned; extra > 0; --extra) {
      const int c = frac[0] >= frac[1] ? 0 : 1;
      ++want[c];
      frac[c] = -1.0;
    }
    for (int c = 0; c < 2; ++c) {
      auto& members = by_class[c];
      if (members.empty()) continue;
      if (want[c] < 1 || want[c] >= static_cast<int>(members.size()))
        fail(errc::too_few_samples, "a class would be empty in train or test");
      rng.shuffle(members);
      train.insert(train.end(), members.begin(), members.begin() + want[c]);
      test.insert(test.end(), members.begin() + want[c], members.end());
    }
  }

  std::sort(train.begin(), train.end());
  std::sort(test.begin(), test.end());
  check_both_classes(train, labels, errc::too_few_samples, "train split lost a class");
  check_both_classes(test, labels, errc::too_few_samples, "test split lost a class");
  return {std::move(train), std::move(test)};
}

std::pair<Dataset, Dataset> train_test_split(const Dataset& data, double ratio,
                                             std::uint64_t seed, bool stratified) {
  auto [train_idx, test_idx] = split_indices(data.y, ratio, seed, stratified);
  return {take_rows(data, train_idx), take_rows(data, test_idx)};
}

std::vector<std::vector<int>> kfold_indices(int n, int k, std::uint64_t seed,
                                            bool stratified,
                                            const Eigen::VectorXi& labels) {
  if (k < 2) fail(errc::invalid_config, "kfold needs k >= 2");
  if (n < k) fail(errc::k_too_large, "kfold: k exceeds sample count");

  Rng rng(seed);
  std::vector<std::vector<int>> folds(static_cast<std::size_t>(k));
  std::size_t dealt = 0;

  if (!stratified) {
    std::vector<int> idx(static_cast<std::size_t>(n));
    std::iota(idx.begin(), idx.end(), 0);
    rng.shuffle(idx);
    for (int i : idx) folds[dealt++ % k].push_back(i);
  } else {
    if (labels.size() != n)
      fail(errc::length_mismatch, "stratified kfold needs a label per sample");
    std::array<std::vector<int>, 2> by_class;
    for (int i = 0; i < n; ++i) by_class[class_of(labels[i])].push_back(i);
    // One continuous deal across classes keeps fold sizes within one.
    for (auto& members : by_class) {
      rng.shuffle(members);
      for (int i : members) folds[dealt++ % k].push_back(i);
    }
  }
  for (auto& f : folds) std::sort(f.begin(), f.end());
  return folds;
}

CvResult cross_validate(const Dataset& train, const SvmParams& params, int k,
                        std::uint64_t seed, bool stratified) {
  const int n = static_cast<int>(train.x.rows());
  const auto folds = kfold_indices(n, k, seed, stratified, train.y);

  CvResult result;
  for (int f = 0; f < k; ++f) {
    std::vector<int> fit_idx;
    fit_idx.reserve(static_cast<std::size_t>(n) - folds[f].size());
    for (int g = 0; g < k; ++g)
      if (g != f) fit_idx.insert(fit_idx.end(), folds[g].begin(), folds[g].end());
    std::sort(fit_idx.begin(), fit_idx.end());
    check_both_classes(fit_idx, train.y, errc::degenerate_fold,
                       "training fold has a single class");

    const Dataset fit = take_rows(train, fit_idx);
    const Dataset hold = take_rows(train, folds[f]);
    const SvmModel model = svm_train(fit.x, fit.y, params);

    const Eigen::VectorXd dec = decision_values(model, hold.x);
    Eigen::VectorXi pred(dec.size());
    for (Eigen::Index i = 0; i < dec.size(); ++i) pred[i] = dec[i] > 0.0 ? 1 : -1;

    const auto conf = confusion_matrix(hold.y, pred);
    const auto report = weighted_metrics(conf);
    result.fold_accuracy.push_back(report.accuracy);
    result.fold_f1w.push_back(report.f1_w);
  }
  result.mean_accuracy =
      std::accumulate(result.fold_accuracy.begin(), result.fold_accuracy.end(), 0.0) / k;
  result.mean_f1w =
      std::accumulate(result.fold_f1w.begin(), result.fold_f1w.end(), 0.0) / k;
  return result;
}

GridResult grid_search(const Dataset& train, const std::vector<double>& cs,
                       const std::vector<double>& gammas, int k, std::uint64_t seed,
                       const SvmParams& base, CvMetric metric, bool stratified) {
  if (cs.empty() || gammas.empty())
    fail(errc::empty_input, "grid_search needs non-empty C and gamma lists");

  GridResult result;
  double best_val = -1.0;
  for (double c : cs) {
    for (double g : gammas) {
      SvmParams p = base;
      p.C = c;
      p.gamma = g;
      const CvResult cv = cross_validate(train, p, k, seed, stratified);
      GridRow row{c, g, cv.mean_accuracy, cv.fold_accuracy, cv.mean_f1w};
      const double val = metric == CvMetric::accuracy ? cv.mean_accuracy : cv.mean_f1w;
      const bool better =
          val > best_val ||
          (val == best_val &&
           (c < result.best_C || (c == result.best_C && g < result.best_gamma)));
      if (better) {
        best_val = val;
        result.best_C = c;
        result.best_gamma = g;
      }
      result.rows.push_back(std::move(row));
    }
  }
  return result;
}

std::pair<std::vector<double>, std::vector<double>> default_grid(
    const Eigen::MatrixXd& x) {
  std::vector<double> cs{0.1, 1.0, 10.0, 100.0};
  std::vector<double> gammas{0.001, 0.01, 0.1, 1.0};
  const double n = static_cast<double>(x.size());
  if (n > 0 && x.cols() > 0) {
    const double mu = x.mean();
    const double var = (x.array() - mu).square().sum() / n;
    if (var > 0.0) {
      const double scale = 1.0 / (static_cast<double>(x.cols()) * var);
      if (std::find(gammas.begin(), gammas.end(), scale) == gammas.end())
        gammas.push_back(scale);
    }
  }
  return {cs, gammas};
}

Confusion confusion_matrix(const Eigen::VectorXi& y_true, const Eigen::VectorXi& y_pred) {
  if (y_true.size() != y_pred.size() || y_true.size() == 0)
    fail(errc::length_mismatch, "confusion_matrix: label vectors must be equal, nonempty");
  Confusion conf;
  for (Eigen::Index i = 0; i < y_true.size(); ++i)
    ++conf.m[class_of(y_true[i])][class_of(y_pred[i])];
  return conf;
}

EvalReport weighted_metrics(const Confusion& confusion) {
  const double total = static_cast<double>(confusion.total());
  if (total <= 0.0) fail(errc::empty_matrix, "weighted_metrics of empty confusion");

  EvalReport report;
  report.confusion = confusion;
  report.accuracy =
      static_cast<double>(confusion.m[0][0] + confusion.m[1][1]) / total;
  for (int c = 0; c < 2; ++c) {
    const double tp = static_cast<double>(confusion.m[c][c]);
    const double support = static_cast<double>(confusion.m[c][0] + confusion.m[c][1]);
    const double predicted = static_cast<double>(confusion.m[0][c] + confusion.m[1][c]);
    const double precision = predicted > 0.0 ? tp / predicted : 0.0;
    const double recall = support > 0.0 ? tp / support : 0.0;
    const double f1 =
        precision + recall > 0.0 ? 2.0 * precision * recall / (precision + recall) : 0.0;
    const double weight = support / total;
    report.precision_w += weight * precision;
    report.recall_w += weight * recall;
    report.f1_w += weight * f1;
  }
  return report;
}

double DecisionGrid::x_at(int ix) const {
  return bounds.xmin + (bounds.xmax - bounds.xmin) * ix / (resolution - 1);
}

double DecisionGrid::y_at(int iy) const {
  return bounds.ymin + (bounds.ymax - bounds.ymin) * iy / (resolution - 1);
}

DecisionGrid decision_grid(const SvmModel& model2d, const GridBounds& bounds,
                           int resolution) {
  if (model2d.support_vectors.cols() != 2)
    fail(errc::wrong_dimensionality, "decision_grid needs a 2-feature model");
  if (resolution < 2) fail(errc::invalid_config, "decision_grid: resolution must be >= 2");
  if (!(bounds.xmin < bounds.xmax) || !(bounds.ymin < bounds.ymax))
    fail(errc::invalid_config, "decision_grid: degenerate bounds");

  DecisionGrid grid;
  grid.bounds = bounds;
  grid.resolution = resolution;
  grid.values.resize(static_cast<std::size_t>(resolution) * resolution);
  Eigen::VectorXd point(2);
  for (int iy = 0; iy < resolution; ++iy) {
    point[1] = grid.y_at(iy);
    for (int ix = 0; ix < resolution; ++ix) {
      point[0] = grid.x_at(ix);
      grid.values[static_cast<std::size_t>(iy) * resolution + ix] =
          decision_value(model2d, point);
    }
  }
  return grid;
}

}  // namespace gazekit
