#pragma once

// Independent reference implementations used only by tests. These must not
// share code with the library paths they check.

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

namespace oracles {

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, sorted
/// descending.
std::vector<double> jacobi_eigenvalues(Eigen::MatrixXd a);

/// Quantile at position (n-1)*p, written independently of the library.
double quantile(std::vector<double> values, double p);

struct QpSolution {
  Eigen::VectorXd alpha;
  double bias = 0.0;
  double objective = 0.0;  // dual objective (maximized)
};

/// Brute-force soft-margin SVM dual solve by accelerated projected
/// gradient; intended for n <= 12.
QpSolution qp_svm(const Eigen::MatrixXd& x, const Eigen::VectorXi& y, double c,
                  double gamma, double weight_pos = 1.0, double weight_neg = 1.0,
                  int iterations = 120000);

double qp_decision(const QpSolution& sol, const Eigen::MatrixXd& x,
                   const Eigen::VectorXi& y, double gamma, const Eigen::VectorXd& q);

/// Seeded tiny SVM instance for oracle-equivalence checks (n <= 12, d <= 3).
struct TinyProblem {
  Eigen::MatrixXd x;
  Eigen::VectorXi y;
  double c = 1.0;
  double gamma = 1.0;
};
TinyProblem make_tiny_problem(std::uint64_t seed);

/// Largest KKT violation of a trained model against its training set:
/// how far y_i f(x_i) strays from the side of 1 its multiplier state allows.
double kkt_violation(const Eigen::MatrixXd& x, const Eigen::VectorXi& y,
                     const Eigen::VectorXd& alpha, const Eigen::VectorXd& cap,
                     const Eigen::VectorXd& decision);

/// Fixed-seed samples shared with the frozen scipy reference values.
std::vector<double> frozen_normal_sample();
std::vector<double> frozen_uniform_sample();

inline constexpr double kFrozenNormalK2 = 4.3855998986233899;
inline constexpr double kFrozenNormalP = 0.11160382568268393;
inline constexpr double kFrozenUniformK2 = 187.5616689791766;
inline constexpr double kFrozenUniformP = 1.8685342933140562e-41;

}  // namespace oracles
