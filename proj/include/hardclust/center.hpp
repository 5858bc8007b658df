#pragma once

#include <span>
#include <string_view>

#include "hardclust/metric.hpp"
#include "hardclust/objective.hpp"

namespace hardclust {

struct CenterOptions {
  double tol = 1e-7;
  int maxIterations = 20000;
  /// Largest dimension for which Hamming/Means searches all binary centers.
  std::size_t hammingMeansMaxDim = 20;
};

struct CenterResult {
  Vector center;
  /// Objective value at `center` (an upper bound on the optimum).
  double cost = 0.0;
  /// Certified lower bound on the optimum.
  double lowerBound = 0.0;
  /// Optimality gap reported by the iterative method (0 for closed forms).
  double gap = 0.0;
  bool converged = true;
  std::string_view method;
};

/// Optimal single center of a nonempty cluster under `metric`.
///
///   L2/Means        centroid (exact)
///   L1/Median       coordinate-wise median (exact)
///   Hamming/Median  coordinate-wise majority, ties to 0 (exact)
///   Hamming/Means   exhaustive over binary centers, dim <= hammingMeansMaxDim
///   LInf/*          radii formulation solved by the barrier method
///   L1/Means        epigraph formulation solved by the barrier method
///   L2/Median       Weiszfeld iteration with the Vardi-Zhang correction
///   L2Squared/*     centroid (Median) or Newton on sum |p-c|^4 (Means)
///
/// For metrics the lower bound is the pair inequality: max_{p,q} d(p,q) for
/// Median and max_{p,q} d(p,q)^2 / 2 for Means. Throws InvalidInput on an
/// empty cluster or Minsum objective, CapExceeded for oversized Hamming/Means.
CenterResult optimalCenter(const PointSet& cluster, MetricTag metric, Objective objective,
                           const CenterOptions& options = {});

inline CenterResult optimalCenter(const PointSet& cluster, Objective objective,
                                  const CenterOptions& options = {}) {
  return optimalCenter(cluster, cluster.metric(), objective, options);
}

/// L-infinity 1-center via the direct epigraph program over (c, t):
/// minimize sum g(t_p) with -t_p <= p_j - c_j <= t_p. Independent of the
/// radii formulation used by optimalCenter; exposed for cross-checking.
CenterResult linfCenterDirect(const PointSet& cluster, Objective objective,
                              const CenterOptions& options = {});

/// Optimal L-infinity 1-center cost from the pairwise distance matrix alone
/// (row-major n x n). A center within the returned radii exists by the
/// one-dimensional Helly property applied per coordinate.
struct LinfRadii {
  std::vector<double> radii;
  double cost = 0.0;
  double gap = 0.0;
  bool converged = true;
};
LinfRadii linfRadii(std::span<const double> distances, std::size_t n, Objective objective,
                    const CenterOptions& options = {});

}  // namespace hardclust
