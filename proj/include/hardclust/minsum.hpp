#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "hardclust/brute_force.hpp"
#include "hardclust/metric.hpp"
#include "hardclust/set_system.hpp"

namespace hardclust {

struct MinsumInstance {
  FiniteMetric metric;
  /// Elements in no set; they sit at distance 2 from everything.
  IndexList isolated;
};

/// dist(u, v) = 1 if some set contains both, else 2.
MinsumInstance buildMinsumInstance(const SetSystem& system);

/// min(r n / 2, r^2 / 2 + (n - r)^2 / 2). Requires r <= n.
double treeChargeBound(double nPrime, double rPrime);

struct FValues {
  double f1, f2, f;
};
/// f1 = n^2 - r n / 2, f2 = n^2 / 2 + n r - r^2, f = max(f1, f2).
FValues fFunctions(double n, double r);

/// Residual e^{-c} (ln(9/7) - c) - e^{-1} / 4 of the constant's equation.
double soundnessResidual(double c);

/// Root of soundnessResidual on [0, ln(9/7)] by bisection, |residual| <= tol.
double solveSoundnessConstant(double tol = 1e-12);

/// Piecewise profile n(alpha) on [0, 1] built from the constant c.
class SoundnessProfile {
 public:
  explicit SoundnessProfile(double c);

  double c() const { return c_; }
  double d1() const { return d1_; }
  double d2() const { return d2_; }
  double n(double alpha) const;
  double r(double alpha) const;

  /// Integral of n(alpha) over [0, 1] in closed form.
  double massClosedForm() const;

 private:
  double c_, d1_, d2_;
};

/// Adaptive Simpson quadrature to absolute tolerance tol.
double adaptiveSimpson(const std::function<double(double)>& f, double a, double b, double tol);

struct SoundnessIntegral {
  /// Adaptive Simpson of max(f1, f2)(n(alpha), r(alpha)) piece by piece.
  double quadrature = 0.0;
  /// Sum of antiderivative differences over the four pieces.
  double closedForm = 0.0;
  double massQuadrature = 0.0;
  double massClosedForm = 0.0;
  /// quadrature / 0.5.
  double gapRatio = 0.0;
};

SoundnessIntegral soundnessIntegral(double c, double tol = 1e-9);

struct MinsumConstants {
  double c = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
  double integralValue = 0.0;
  double integralClosedForm = 0.0;
  double gapRatio = 0.0;
  double massCheck = 0.0;
  double residual = 0.0;
};

MinsumConstants minsumConstants(double tol = 1e-12);

struct CaseOneBound {
  /// Sum over acyclic clusters of max(2 C(n_i, 2) - treeChargeBound(n_i, r_i), 0).
  double bound = 0.0;
  std::size_t acyclicClusters = 0;
  std::size_t skippedClusters = 0;
};

/// Lower bound on the minsum cost of `partition` in buildMinsumInstance(system).
/// r_i is the largest trace of a single set on cluster i; clusters whose
/// induced incidence graph has a cycle are skipped.
CaseOneBound caseOneBound(const SetSystem& system, const Clustering& partition);

struct MinsumGapReport {
  /// Cost of the supplied certificate, else the exact optimum.
  double completenessUB = 0.0;
  /// Exact optimum.
  double soundnessLB = 0.0;
  double ratio = 0.0;
  bool usedCertificate = false;
  Clustering optimal;
  /// sum_i f(n_i, r_i) over the optimal partition (analytic, not a bound at
  /// finite size).
  double fFormula = 0.0;
  CaseOneBound caseOne;
};

MinsumGapReport minsumGapExperiment(const SetSystem& system, std::size_t k,
                                    const std::optional<Clustering>& certificate = std::nullopt,
                                    const BruteForceOptions& options = {});

}  // namespace hardclust
