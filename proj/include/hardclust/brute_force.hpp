#pragma once

#include <cstddef>
#include <vector>

#include "hardclust/center.hpp"
#include "hardclust/metric.hpp"
#include "hardclust/objective.hpp"

namespace hardclust {

enum class CenterMode { Continuous, DataPoints };

struct BruteForceOptions {
  /// Largest n for set-partition enumeration (Continuous mode).
  std::size_t partitionCap = 12;
  /// Largest n for k-subset enumeration (DataPoints mode).
  std::size_t tupleCap = 16;
  /// Worker threads; the result does not depend on this.
  unsigned jobs = 1;
  CenterOptions center;
};

struct BruteForceResult {
  Clustering clustering;
  double cost = 0.0;
  /// DataPoints mode: indices of the chosen centers (padded to k by repeats).
  std::vector<std::size_t> centerIndices;
};

/// Exact optimum by enumeration.
///
/// Continuous: all partitions into at most k parts, encoded as restricted
/// growth strings; each part is charged its optimalCenter cost (or its
/// pairwise sum for Minsum). Ties go to the lexicographically smallest
/// encoding. DataPoints: all k-subsets of input points with nearest
/// assignment, ties to the smallest subset. Throws CapExceeded above the
/// caps and InvalidInput for Minsum in DataPoints mode.
BruteForceResult bruteForceCluster(const PointSet& points, std::size_t k, Objective objective,
                                   CenterMode mode, const BruteForceOptions& options = {});

/// Finite-metric input. Continuous mode supports Minsum only (a finite
/// metric has no ambient space for centers; embed it with frechetEmbed).
BruteForceResult bruteForceCluster(const FiniteMetric& metric, std::size_t k, Objective objective,
                                   CenterMode mode, const BruteForceOptions& options = {});

/// Minimum of sum_i cost[mask_i] over partitions of n labelled points into at
/// most k parts (the same enumeration as Continuous mode, over a supplied
/// per-subset cost table of size 2^n). Returns the winning assignment.
/// Branches are pruned on partial cost, which is exact only if the cost is
/// monotone under adding points; pass monotone = false otherwise.
struct PartitionOptimum {
  std::vector<std::size_t> assignment;
  double cost = 0.0;
};
PartitionOptimum minimumPartition(const std::vector<double>& subsetCost, std::size_t n,
                                  std::size_t k, unsigned jobs = 1, bool monotone = true);

}  // namespace hardclust
