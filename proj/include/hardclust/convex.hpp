#pragma once

#include <Eigen/Dense>

namespace hardclust::convex {

/// minimize  sum_i g(w_i . x)   subject to  A x <= b
/// where g(u) = u (Linear) or g(u) = u^2 (Squared) and w_i are the rows of W.
struct Problem {
  enum class Shape { Linear, Squared };
  Shape shape = Shape::Linear;
  Eigen::MatrixXd W;
  Eigen::MatrixXd A;
  Eigen::VectorXd b;
};

struct Result {
  Eigen::VectorXd x;
  double objective = 0.0;
  /// Duality-gap bound m/s of the last central point; objective - gapBound
  /// is (up to centering error) a lower bound on the optimum.
  double gapBound = 0.0;
  int newtonSteps = 0;
  bool converged = false;
};

struct Options {
  double tol = 1e-7;
  int maxNewtonSteps = 5000;
  double growth = 8.0;
};

double evaluate(const Problem& problem, const Eigen::VectorXd& x);

/// Log-barrier method with damped Newton centering. x0 must be strictly
/// feasible (A x0 < b). Stops once the gap bound m/s drops below tol.
Result minimize(const Problem& problem, Eigen::VectorXd x0, const Options& options = {});

}  // namespace hardclust::convex
