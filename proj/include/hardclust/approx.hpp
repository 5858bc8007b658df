#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hardclust/metric.hpp"
#include "hardclust/objective.hpp"

namespace hardclust {

struct DiscreteSolution {
  std::vector<Vector> centers;
  /// Cost on the points it was computed for (weighted where weights apply).
  double cost = 0.0;
  Clustering clustering;
};

/// Best k data points as centers under nearest assignment (ties to the
/// lexicographically smallest subset). Throws CapExceeded when
/// C(n, k) > cap.
DiscreteSolution twoApproxEnumerate(const PointSet& points, std::size_t k, Objective objective,
                                    double cap = 1e7);

struct CandidateCenterSet {
  PointSet centers;
  double epsilon = 0.0;
  /// Cost of the data-point solution used to set the radius range.
  double gamma = 0.0;
  /// Dyadic radii used for the grids.
  std::vector<double> radii;
  /// Grid spacing as a fraction of the radius.
  double spacingFactor = 0.0;
};

/// Grids around every point: for each dyadic R in [eps g / n, 2 g] (g = gamma
/// for Median, sqrt(gamma) for Means) an axis-aligned grid with spacing
/// 2 eta R covering the L-infinity ball B(p, R) to within eta R, where
/// eta = eps / 2 (Median) or (sqrt(1 + eps) - 1) / 2 (Means). Data points
/// are always included; duplicates are removed.
CandidateCenterSet candidateCenterSet(const PointSet& points, std::size_t k, double eps,
                                      Objective objective, std::size_t maxCandidates = 2'000'000);

/// Grid of spacing 2 eta R clipped to B(p, R) in L-infinity.
std::vector<Vector> ballGrid(std::span<const double> p, double R, double eta);

/// Exact best choice of k centers from `candidates` (weighted nearest
/// assignment), by minimizing over partitions of the points into k parts
/// with the best single candidate per part. Needs n <= 20.
DiscreteSolution bestCandidateCenters(const PointSet& points, const std::vector<double>& weights,
                                      const PointSet& candidates, std::size_t k,
                                      Objective objective, unsigned jobs = 1);

struct Coreset {
  PointSet points;
  std::vector<double> weights;
  std::vector<std::size_t> source;
  double epsilon = 0.0;
};

/// Rings around the data-point solution's centers: a point at distance d
/// from its nearest center lies in ring 0 if d <= eps g / n and in ring i if
/// d lies in (2^{i-1}, 2^i] times that. Each nonempty (center, ring) group
/// contributes min(size, s) points sampled without replacement, each
/// weighted size / taken. Weights sum to n.
Coreset coresetBuild(const PointSet& points, std::size_t k, double eps, Objective objective,
                     std::uint64_t seed, std::size_t samplesPerRing = 40);

/// Weighted cost of a center set.
double weightedCost(const PointSet& points, const std::vector<double>& weights,
                    const std::vector<Vector>& centers, Objective objective);

struct CoresetCheck {
  std::size_t subsetsChecked = 0;
  double maxRelativeError = 0.0;
  bool holds = true;
};

/// |cost_W(S) - cost_P(S)| <= eps cost_P(S) for every k-subset S of the
/// candidates. Throws CapExceeded when C(|candidates|, k) > cap.
CoresetCheck verifyCoreset(const PointSet& points, const Coreset& coreset,
                           const PointSet& candidates, std::size_t k, double eps,
                           Objective objective, double cap = 1e8);

/// Coreset, then the best k data points for the weighted coreset.
DiscreteSolution pipelineBelow2(const PointSet& points, std::size_t k, double eps,
                                Objective objective, std::uint64_t seed);

/// Candidate set, then the exact best k candidates.
DiscreteSolution pipelineOnePlusEps(const PointSet& points, std::size_t k, double eps,
                                    Objective objective, unsigned jobs = 1);

}  // namespace hardclust
