#pragma once

#include <string_view>

#include "hardclust/metric.hpp"

namespace hardclust {

enum class Objective { Median, Means, Minsum };

std::string_view objectiveName(Objective o);
Objective parseObjective(std::string_view s);

/// Per-point contribution of a distance: d for Median, d^2 for Means.
inline double pointCost(double d, Objective o) { return o == Objective::Means ? d * d : d; }

struct ObjectiveCost {
  /// Cost with every point charged to its assigned center.
  double assigned = 0.0;
  /// Cost after reassigning every point to its nearest center; never larger.
  double nearest = 0.0;
};

/// Sum over points of (squared) distance to the center. Requires explicit
/// centers; throws InvalidInput otherwise. Objective must be Median or Means.
ObjectiveCost objectiveCost(const PointSet& points, const Clustering& clustering,
                            Objective objective);

/// Sum over clusters of all intra-cluster pairwise distances, each unordered
/// pair counted once.
double minsumCost(const FiniteMetric& metric, const Clustering& partition);
double minsumCost(const PointSet& points, const Clustering& partition);

struct PairwiseIdentity {
  double centroidCost;
  double pairwiseCost;
};

/// Squared-L2 cost to cluster centroids and the pairwise form
/// sum_i 1/(2|C_i|) sum_{p,q in C_i} |p-q|^2, computed independently.
/// Throws InvalidInput if the metric is not L2 or a cluster is empty.
PairwiseIdentity kmeansPairwiseIdentity(const PointSet& points, const Clustering& partition);

}  // namespace hardclust
