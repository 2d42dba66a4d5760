#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>

#include "gazekit/error.hpp"
#include "gazekit/rng.hpp"
#include "gazekit/svm.hpp"
#include "oracles.hpp"

using namespace gazekit;

namespace {

Eigen::VectorXd vec2(double a, double b) {
  Eigen::VectorXd v(2);
  v << a, b;
  return v;
}

/// alpha/cap per training row, reconstructed from the stored support set.
std::pair<Eigen::VectorXd, Eigen::VectorXd> alphas_and_caps(
    const SvmModel& model, const Eigen::VectorXi& y) {
  Eigen::VectorXd alpha = Eigen::VectorXd::Zero(y.size());
  for (Eigen::Index s = 0; s < model.dual_coef.size(); ++s)
    alpha[model.support_indices[static_cast<std::size_t>(s)]] =
        std::abs(model.dual_coef[s]);
  Eigen::VectorXd cap(y.size());
  for (Eigen::Index i = 0; i < y.size(); ++i)
    cap[i] = model.params.C * (y[i] > 0 ? model.params.class_weight_pos
                                        : model.params.class_weight_neg);
  return {alpha, cap};
}

}  // namespace

TEST_SUITE("svm") {

TEST_CASE("rbf kernel closed forms") {
  CHECK(rbf_kernel(vec2(0.3, -1.0), vec2(0.3, -1.0), 2.0) == 1.0);
  CHECK(rbf_kernel(vec2(5.0, 1.0), vec2(-3.0, 2.0), 0.0) == 1.0);
  CHECK(rbf_kernel(vec2(0, 0), vec2(1, 1), 0.5) ==
        doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
  Eigen::VectorXd three(3);
  three.setZero();
  CHECK_THROWS_AS(rbf_kernel(vec2(0, 0), three, 1.0), Error);
}

TEST_CASE("two points: midpoint decision is zero") {
  Eigen::MatrixXd x(2, 2);
  x << 0, 0, 1, 0;
  Eigen::VectorXi y(2);
  y << -1, 1;
  SvmParams params;
  params.C = 5.0;
  params.gamma = 0.8;
  const auto model = svm_train(x, y, params);
  CHECK(std::abs(decision_value(model, vec2(0.5, 0.0))) <= params.tol);
  CHECK(decision_value(model, vec2(1.0, 0.0)) > 0.0);
  CHECK(decision_value(model, vec2(0.0, 0.0)) < 0.0);
}

TEST_CASE("xor is learned with an RBF kernel") {
  Eigen::MatrixXd x(4, 2);
  x << 0, 0, 1, 1, 0, 1, 1, 0;
  Eigen::VectorXi y(4);
  y << 1, 1, -1, -1;
  SvmParams params;
  params.C = 10.0;
  params.gamma = 1.0;
  const auto model = svm_train(x, y, params);
  for (int i = 0; i < 4; ++i) {
    const double f = decision_value(model, x.row(i).transpose());
    CHECK(f * y[i] > 0.0);
  }
}

TEST_CASE("matches the brute-force QP oracle on seeded tiny problems") {
  for (std::uint64_t seed = 0; seed < 24; ++seed) {
    CAPTURE(seed);
    const auto p = oracles::make_tiny_problem(seed);
    SvmParams params;
    params.C = p.c;
    params.gamma = p.gamma;
    params.tol = 1e-5;
    const auto model = svm_train(p.x, p.y, params);
    const auto oracle = oracles::qp_svm(p.x, p.y, p.c, p.gamma);

    CHECK(model.meta.objective >= oracle.objective - 1e-3);
    CHECK(std::abs(model.meta.objective - oracle.objective) < 1e-3);

    for (Eigen::Index i = 0; i < p.x.rows(); ++i) {
      const double mine = decision_value(model, p.x.row(i).transpose());
      const double theirs =
          oracles::qp_decision(oracle, p.x, p.y, p.gamma, p.x.row(i).transpose());
      CHECK(std::abs(mine - theirs) < 1e-3);
    }
  }
}

TEST_CASE("KKT conditions hold within tol on trained models") {
  for (std::uint64_t seed = 0; seed < 24; ++seed) {
    CAPTURE(seed);
    const auto p = oracles::make_tiny_problem(seed);
    SvmParams params;
    params.C = p.c;
    params.gamma = p.gamma;
    const auto model = svm_train(p.x, p.y, params);
    const auto [alpha, cap] = alphas_and_caps(model, p.y);
    const Eigen::VectorXd dec = decision_values(model, p.x);
    CHECK(oracles::kkt_violation(p.x, p.y, alpha, cap, dec) <=
          params.tol * (1.0 + 1e-6));
  }
}

TEST_CASE("dual coefficients balance to zero and respect the box") {
  const auto p = oracles::make_tiny_problem(3);
  SvmParams params;
  params.C = p.c;
  params.gamma = p.gamma;
  params.class_weight_pos = 1.5;
  params.class_weight_neg = 0.75;
  const auto model = svm_train(p.x, p.y, params);
  CHECK(std::abs(model.dual_coef.sum()) <= 1e-6);
  for (Eigen::Index s = 0; s < model.dual_coef.size(); ++s) {
    const int yi = model.dual_coef[s] > 0 ? 1 : -1;
    const double cap =
        params.C * (yi > 0 ? params.class_weight_pos : params.class_weight_neg);
    CHECK(std::abs(model.dual_coef[s]) > 0.0);
    CHECK(std::abs(model.dual_coef[s]) <= cap * (1.0 + 1e-12));
  }
}

TEST_CASE("decision far from all support vectors decays to the bias") {
  const auto p = oracles::make_tiny_problem(5);
  SvmParams params;
  params.C = p.c;
  params.gamma = p.gamma;
  const auto model = svm_train(p.x, p.y, params);
  Eigen::VectorXd far(p.x.cols());
  far.setConstant(1e4);
  CHECK(std::abs(decision_value(model, far) - model.bias) < 1e-6);
}

TEST_CASE("predict agrees with the decision sign; exact zero is not-saccade") {
  const auto p = oracles::make_tiny_problem(7);
  SvmParams params;
  params.C = p.c;
  params.gamma = p.gamma;
  const auto model = svm_train(p.x, p.y, params);
  Rng rng(123);
  for (int t = 0; t < 50; ++t) {
    Eigen::VectorXd q(p.x.cols());
    for (Eigen::Index j = 0; j < q.size(); ++j) q[j] = rng.uniform(-3.0, 3.0);
    CHECK(predict(model, q) == (decision_value(model, q) > 0.0));
  }
  SvmModel zero = model;
  zero.dual_coef.setZero();
  zero.bias = 0.0;
  CHECK_FALSE(predict(zero, Eigen::VectorXd::Zero(p.x.cols())));
}

TEST_CASE("prediction is translation invariant") {
  const auto p = oracles::make_tiny_problem(11);
  SvmParams params;
  params.C = p.c;
  params.gamma = p.gamma;
  params.tol = 1e-6;
  const auto base = svm_train(p.x, p.y, params);
  Eigen::MatrixXd shifted = p.x;
  Eigen::RowVectorXd shift(p.x.cols());
  for (Eigen::Index j = 0; j < shift.size(); ++j) shift[j] = 10.0 + 3.0 * j;
  shifted.rowwise() += shift;
  const auto moved = svm_train(shifted, p.y, params);
  Rng rng(9);
  for (int t = 0; t < 20; ++t) {
    Eigen::VectorXd q(p.x.cols());
    for (Eigen::Index j = 0; j < q.size(); ++j) q[j] = rng.uniform(-2.0, 2.0);
    const double f0 = decision_value(base, q);
    const double f1 = decision_value(moved, q + shift.transpose());
    CHECK(f0 == doctest::Approx(f1).epsilon(1e-5));
  }
}

TEST_CASE("raising C never adds margin violations on separable data") {
  Rng rng(31);
  for (int trial = 0; trial < 5; ++trial) {
    Eigen::MatrixXd x(16, 2);
    Eigen::VectorXi y(16);
    for (int i = 0; i < 16; ++i) {
      const bool pos = i % 2 == 0;
      x(i, 0) = rng.gaussian(pos ? 2.0 : -2.0, 0.4);
      x(i, 1) = rng.gaussian(pos ? 2.0 : -2.0, 0.4);
      y[i] = pos ? 1 : -1;
    }
    int prev = 17;
    for (double c : {0.5, 5.0, 50.0}) {
      SvmParams params;
      params.C = c;
      params.gamma = 0.5;
      params.tol = 1e-5;
      const auto model = svm_train(x, y, params);
      int violations = 0;
      for (int i = 0; i < 16; ++i)
        if (y[i] * decision_value(model, x.row(i).transpose()) < 1.0 - 1e-6)
          ++violations;
      CHECK(violations <= prev);
      prev = violations;
    }
  }
}

TEST_CASE("results do not depend on the kernel cache size") {
  const auto p = oracles::make_tiny_problem(13);
  SvmParams big;
  big.C = p.c;
  big.gamma = p.gamma;
  SvmParams tiny = big;
  tiny.cache_mb = 0.0;  // clamps to the 2-row minimum
  const auto a = svm_train(p.x, p.y, big);
  const auto b = svm_train(p.x, p.y, tiny);
  CHECK(a.bias == b.bias);
  CHECK(a.support_indices == b.support_indices);
  CHECK((a.dual_coef - b.dual_coef).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("input validation") {
  Eigen::MatrixXd x(3, 2);
  x << 0, 0, 1, 1, 2, 2;
  Eigen::VectorXi y(3);
  y << 1, 1, 1;
  SvmParams params;
  CHECK_THROWS_AS(svm_train(x, y, params), Error);  // single class
  Eigen::VectorXi bad(3);
  bad << 1, 0, -1;
  CHECK_THROWS_AS(svm_train(x, bad, params), Error);  // labels not +-1
  Eigen::VectorXi short_y(2);
  short_y << 1, -1;
  CHECK_THROWS_AS(svm_train(x, short_y, params), Error);  // length mismatch
  y << 1, -1, 1;
  params.gamma = 0.0;
  CHECK_THROWS_AS(svm_train(x, y, params), Error);  // gamma must be positive
}

}  // TEST_SUITE
