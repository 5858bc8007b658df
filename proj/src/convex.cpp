#include "hardclust/convex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hardclust/error.hpp"

namespace hardclust::convex {

double evaluate(const Problem& problem, const Eigen::VectorXd& x) {
  const Eigen::VectorXd u = problem.W * x;
  return problem.shape == Problem::Shape::Squared ? u.squaredNorm() : u.sum();
}

namespace {

// Barrier value s*f0(x) - sum log(b - Ax); +inf outside the interior.
double barrierValue(const Problem& p, const Eigen::VectorXd& x, double s) {
  const Eigen::VectorXd slack = p.b - p.A * x;
  if ((slack.array() <= 0.0).any()) return std::numeric_limits<double>::infinity();
  return s * evaluate(p, x) - slack.array().log().sum();
}

}  // namespace

Result minimize(const Problem& problem, Eigen::VectorXd x, const Options& options) {
  const auto m = static_cast<double>(problem.A.rows());
  if (problem.A.cols() != x.size() || problem.W.cols() != x.size() ||
      problem.b.size() != problem.A.rows()) {
    throw InvalidInput("convex::minimize: inconsistent problem dimensions");
  }
  if (((problem.b - problem.A * x).array() <= 0.0).any()) {
    throw InvalidInput("convex::minimize: starting point is not strictly feasible");
  }

  Result result;
  if (m == 0) {
    result.x = x;
    result.objective = evaluate(problem, x);
    result.converged = true;
    return result;
  }

  const bool squared = problem.shape == Problem::Shape::Squared;
  const Eigen::MatrixXd WtW = squared ? Eigen::MatrixXd(problem.W.transpose() * problem.W)
                                      : Eigen::MatrixXd();
  const Eigen::VectorXd linGrad =
      squared ? Eigen::VectorXd() : Eigen::VectorXd(problem.W.transpose() *
                                                    Eigen::VectorXd::Ones(problem.W.rows()));

  double s = m / std::max(1.0, std::abs(evaluate(problem, x)));
  int steps = 0;
  bool stalled = false;

  while (true) {
    // Centering.
    for (int inner = 0; inner < 200 && steps < options.maxNewtonSteps; ++inner, ++steps) {
      const Eigen::VectorXd slack = problem.b - problem.A * x;
      const Eigen::VectorXd inv = slack.cwiseInverse();
      Eigen::VectorXd grad = problem.A.transpose() * inv;
      Eigen::MatrixXd hess = problem.A.transpose() * inv.cwiseAbs2().asDiagonal() * problem.A;
      if (squared) {
        grad += s * 2.0 * (WtW * x);
        hess += s * 2.0 * WtW;
      } else {
        grad += s * linGrad;
      }
      Eigen::LDLT<Eigen::MatrixXd> ldlt(hess);
      Eigen::VectorXd dx = ldlt.solve(-grad);
      if (ldlt.info() != Eigen::Success || !dx.allFinite()) {
        const double ridge = 1e-12 * std::max(1.0, hess.diagonal().cwiseAbs().maxCoeff());
        hess.diagonal().array() += ridge;
        dx = hess.ldlt().solve(-grad);
        if (!dx.allFinite()) {
          stalled = true;
          break;
        }
      }
      const double decrement = -grad.dot(dx);
      if (decrement <= 2e-10) break;

      // Backtracking: stay interior, then Armijo.
      const Eigen::VectorXd Adx = problem.A * dx;
      double step = 1.0;
      for (Eigen::Index i = 0; i < Adx.size(); ++i) {
        if (Adx[i] > 0.0) step = std::min(step, 0.99 * slack[i] / Adx[i]);
      }
      const double f0 = barrierValue(problem, x, s);
      bool accepted = false;
      for (int ls = 0; ls < 60; ++ls) {
        const Eigen::VectorXd trial = x + step * dx;
        const double ft = barrierValue(problem, trial, s);
        if (ft <= f0 - 0.25 * step * decrement) {
          x = trial;
          accepted = true;
          break;
        }
        step *= 0.5;
      }
      if (!accepted) break;
    }
    if (stalled || steps >= options.maxNewtonSteps) break;
    if (m / s < options.tol) {
      result.converged = true;
      break;
    }
    s *= options.growth;
  }

  result.x = x;
  result.objective = evaluate(problem, x);
  result.gapBound = m / s;
  result.newtonSteps = steps;
  return result;
}

}  // namespace hardclust::convex
