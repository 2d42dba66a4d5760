#include "gazekit/svm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "gazekit/error.hpp"

namespace gazekit {

double rbf_kernel(const Eigen::VectorXd& x, const Eigen::VectorXd& y, double gamma) {
  if (x.size() != y.size())
    fail(errc::dimension_mismatch, "rbf_kernel: vector sizes differ");
  if (gamma < 0.0) fail(errc::invalid_config, "rbf_kernel: gamma must be >= 0");
  return std::exp(-gamma * (x - y).squaredNorm());
}

namespace {

using RowMajorXd = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// FIFO cache of RBF kernel rows, stored as float like most dual solvers.
/// Correctness does not depend on it; it only avoids recomputing rows for
/// the frequently revisited working pairs.
class KernelRowCache {
 public:
  KernelRowCache(const RowMajorXd& x, double gamma, double cache_mb)
      : x_(x),
        gamma_(gamma),
        n_(static_cast<int>(x.rows())),
        sq_(x.rowwise().squaredNorm()) {
    std::size_t cap = static_cast<std::size_t>(
        std::max(2.0, cache_mb * 1024.0 * 1024.0 / (4.0 * static_cast<double>(n_))));
    cap = std::min<std::size_t>(cap, static_cast<std::size_t>(n_));
    cap = std::max<std::size_t>(cap, 2);
    slots_.resize(cap);
    owner_.assign(cap, -1);
    slot_of_.assign(static_cast<std::size_t>(n_), -1);
  }

  const float* row(int i, int pinned = -1) {
    if (slot_of_[i] >= 0) return slots_[slot_of_[i]].data();
    int s = static_cast<int>(clock_ % slots_.size());
    if (owner_[s] >= 0 && owner_[s] == pinned) s = static_cast<int>(++clock_ % slots_.size());
    ++clock_;
    if (owner_[s] >= 0) slot_of_[owner_[s]] = -1;
    owner_[s] = i;
    slot_of_[i] = s;
    compute_row(i, slots_[s]);
    return slots_[s].data();
  }

 private:
  void compute_row(int i, std::vector<float>& out) {
    out.resize(static_cast<std::size_t>(n_));
    const Eigen::VectorXd prod = x_ * x_.row(i).transpose();
    Eigen::Map<Eigen::ArrayXf> row(out.data(), n_);
    row = ((-gamma_) * (sq_.array() + sq_[i] - 2.0 * prod.array()))
              .cast<float>()
              .exp();
  }

  const RowMajorXd& x_;
  double gamma_;
  int n_;
  Eigen::VectorXd sq_;
  std::vector<std::vector<float>> slots_;
  std::vector<int> owner_;
  std::vector<int> slot_of_;
  std::size_t clock_ = 0;
};

}  // namespace

SvmModel svm_train(const Eigen::MatrixXd& x, const Eigen::VectorXi& y,
                   const SvmParams& params) {
  const int n = static_cast<int>(x.rows());
  if (y.size() != n) fail(errc::length_mismatch, "svm_train: labels/rows mismatch");
  if (n < 2) fail(errc::too_few_samples, "svm_train needs n >= 2");
  if (params.C <= 0.0 || params.gamma <= 0.0 || params.tol <= 0.0)
    fail(errc::invalid_config, "svm_train: C, gamma, tol must be > 0");
  if (params.class_weight_pos < 0.0 || params.class_weight_neg < 0.0)
    fail(errc::invalid_config, "svm_train: class weights must be >= 0");

  bool has_pos = false, has_neg = false;
  for (int i = 0; i < n; ++i) {
    if (y[i] == 1) has_pos = true;
    else if (y[i] == -1) has_neg = true;
    else fail(errc::invalid_config, "svm_train: labels must be +1 or -1");
  }
  if (!has_pos || !has_neg) fail(errc::single_class, "svm_train: one class only");

  const RowMajorXd xr = x;
  KernelRowCache cache(xr, params.gamma, params.cache_mb);

  std::vector<double> cap(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    cap[i] = params.C * (y[i] > 0 ? params.class_weight_pos : params.class_weight_neg);

  std::vector<double> alpha(static_cast<std::size_t>(n), 0.0);
  Eigen::ArrayXd grad = Eigen::ArrayXd::Constant(n, -1.0);
  Eigen::ArrayXd yd(n);
  for (int t = 0; t < n; ++t) yd[t] = y[t];

  // Gradients are kept exact for the full set every iteration (the update
  // is a vectorized O(n) pass); only the selection scans shrink to the
  // plausibly-violating subset. Convergence is always re-verified on the
  // full set, so the stopping guarantee is unaffected by shrinking.
  std::vector<int> active(static_cast<std::size_t>(n));
  for (int t = 0; t < n; ++t) active[static_cast<std::size_t>(t)] = t;
  const std::int64_t rebuild_every = 1000;
  std::int64_t next_rebuild = rebuild_every;

  const double inf = std::numeric_limits<double>::infinity();
  std::int64_t iter = 0;
  bool converged = false;
  double last_m = 0.0, last_mm = 0.0;

  const auto scan_max_violation = [&](const std::vector<int>& over, int& i_out,
                                      double& m_out, double& mm_out) {
    i_out = -1;
    m_out = -inf;
    mm_out = inf;
    for (int t : over) {
      const double v = -yd[t] * grad[t];
      const bool up = (y[t] > 0 && alpha[t] < cap[t]) || (y[t] < 0 && alpha[t] > 0.0);
      const bool low = (y[t] < 0 && alpha[t] < cap[t]) || (y[t] > 0 && alpha[t] > 0.0);
      if (up && v > m_out) { m_out = v; i_out = t; }
      if (low && v < mm_out) mm_out = v;
    }
  };

  std::vector<int> everything(active);

  while (iter < params.max_passes) {
    int i = -1;
    double m = -inf, mm = inf;
    scan_max_violation(active, i, m, mm);

    const bool active_done = i < 0 || m - mm <= params.tol;
    if (active_done || iter >= next_rebuild) {
      // Re-check on the full set and rebuild the active scan list around
      // the current violation window.
      scan_max_violation(everything, i, m, mm);
      last_m = m;
      last_mm = mm;
      if (i < 0 || m - mm <= params.tol) {
        converged = true;
        break;
      }
      active.clear();
      for (int t = 0; t < n; ++t) {
        const bool free = alpha[t] > 0.0 && alpha[t] < cap[t];
        const bool up = (y[t] > 0 && alpha[t] < cap[t]) || (y[t] < 0 && alpha[t] > 0.0);
        const double v = -yd[t] * grad[t];
        const bool up_live = up && v > mm - params.tol;
        const bool low = (y[t] < 0 && alpha[t] < cap[t]) || (y[t] > 0 && alpha[t] > 0.0);
        const bool low_live = low && v < m + params.tol;
        if (free || up_live || low_live) active.push_back(t);
      }
      next_rebuild = iter + rebuild_every;
    }
    last_m = m;
    last_mm = mm;

    const float* ki = cache.row(i);

    // j: largest second-order gain among the violators, using the unit RBF
    // diagonal: a_t = K_ii + K_tt - 2 K_it = 2 (1 - K_it).
    int j = -1;
    double best_gain = -1.0, vj = 0.0;
    for (int t : active) {
      const bool low = (y[t] < 0 && alpha[t] < cap[t]) || (y[t] > 0 && alpha[t] > 0.0);
      if (!low) continue;
      const double v = -yd[t] * grad[t];
      if (v >= m) continue;
      const double b = m - v;
      const double a = std::max(2.0 - 2.0 * static_cast<double>(ki[t]), 1e-12);
      const double gain = b * b / a;
      if (gain > best_gain) {
        best_gain = gain;
        j = t;
        vj = v;
      }
    }
    if (j < 0) {
      // The chosen i has no active partner; force a full rebuild.
      next_rebuild = iter;
      continue;
    }
    const float* kj = cache.row(j, i);

    const double eta = std::max(2.0 - 2.0 * static_cast<double>(ki[j]), 1e-12);
    const double cap_i = y[i] > 0 ? cap[i] - alpha[i] : alpha[i];
    const double cap_j = y[j] > 0 ? alpha[j] : cap[j] - alpha[j];
    const double lambda = std::min((m - vj) / eta, std::min(cap_i, cap_j));

    alpha[i] += y[i] * lambda;
    alpha[j] -= y[j] * lambda;
    // Snap to the box so membership tests stay exact.
    for (int t : {i, j}) {
      const double snap = 1e-12 * std::max(1.0, cap[t]);
      if (alpha[t] < snap) alpha[t] = 0.0;
      else if (alpha[t] > cap[t] - snap) alpha[t] = cap[t];
    }

    grad += lambda * yd *
            (Eigen::Map<const Eigen::ArrayXf>(ki, n).cast<double>() -
             Eigen::Map<const Eigen::ArrayXf>(kj, n).cast<double>());
    ++iter;
  }

  // Bias: mean of -y*grad over free vectors, else the midpoint of the
  // remaining KKT interval.
  double bias = 0.0;
  int n_free = 0;
  for (int t = 0; t < n; ++t) {
    if (alpha[t] > 0.0 && alpha[t] < cap[t]) {
      bias += -static_cast<double>(y[t]) * grad[t];
      ++n_free;
    }
  }
  if (n_free > 0) {
    bias /= n_free;
  } else if (std::isfinite(last_m) && std::isfinite(last_mm)) {
    bias = (last_m + last_mm) / 2.0;
  }

  double objective = 0.0;
  int n_sv = 0;
  for (int t = 0; t < n; ++t) {
    objective += 0.5 * alpha[t] * (1.0 - grad[t]);
    if (alpha[t] > 0.0) ++n_sv;
  }

  SvmModel model;
  model.params = params;
  model.bias = bias;
  model.meta.iterations = iter;
  model.meta.objective = objective;
  model.meta.converged = converged;
  model.meta.n_support = n_sv;
  model.support_vectors.resize(n_sv, x.cols());
  model.dual_coef.resize(n_sv);
  model.support_indices.reserve(static_cast<std::size_t>(n_sv));
  int r = 0;
  for (int t = 0; t < n; ++t) {
    if (alpha[t] > 0.0) {
      model.support_vectors.row(r) = x.row(t);
      model.dual_coef[r] = alpha[t] * y[t];
      model.support_indices.push_back(t);
      ++r;
    }
  }
  return model;
}

double decision_value(const SvmModel& model, const Eigen::VectorXd& x) {
  if (x.size() != model.support_vectors.cols())
    fail(errc::dimension_mismatch, "decision_value: dimension mismatch");
  double sum = model.bias;
  for (Eigen::Index i = 0; i < model.support_vectors.rows(); ++i) {
    const double d2 = (model.support_vectors.row(i).transpose() - x).squaredNorm();
    sum += model.dual_coef[i] * std::exp(-model.params.gamma * d2);
  }
  return sum;
}

Eigen::VectorXd decision_values(const SvmModel& model, const Eigen::MatrixXd& x) {
  if (x.cols() != model.support_vectors.cols())
    fail(errc::dimension_mismatch, "decision_values: dimension mismatch");
  const auto q = x.rows();
  const auto m = model.support_vectors.rows();
  if (m == 0) return Eigen::VectorXd::Constant(q, model.bias);
  const Eigen::VectorXd sv_sq = model.support_vectors.rowwise().squaredNorm();
  const Eigen::VectorXd x_sq = x.rowwise().squaredNorm();
  const Eigen::MatrixXd prod = model.support_vectors * x.transpose();  // m x q
  Eigen::VectorXd out(q);
  for (Eigen::Index c = 0; c < q; ++c) {
    const Eigen::ArrayXd d2 = sv_sq.array() + x_sq[c] - 2.0 * prod.col(c).array();
    out[c] = model.dual_coef.dot(((-model.params.gamma) * d2).exp().matrix()) +
             model.bias;
  }
  return out;
}

bool predict(const SvmModel& model, const Eigen::VectorXd& x) {
  return decision_value(model, x) > 0.0;
}

}  // namespace gazekit
