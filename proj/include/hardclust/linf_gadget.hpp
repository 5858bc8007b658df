#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "hardclust/brute_force.hpp"
#include "hardclust/graph.hpp"
#include "hardclust/metric.hpp"
#include "hardclust/objective.hpp"

namespace hardclust {

enum class GadgetVariant { Standard, Lattice };

std::string_view variantName(GadgetVariant v);
GadgetVariant parseVariant(std::string_view s);

struct GadgetInstance {
  OrientedGraph graph;
  /// One L-infinity point per vertex, one coordinate per arc.
  PointSet points;
  GadgetVariant variant = GadgetVariant::Standard;
  std::optional<std::vector<IndexList>> independentSets;
};

/// Coordinate (u, v) of A(w): Standard 2 / -2 / 0 for w = u / w = v / else,
/// Lattice 1.5 / -0.5 / 0.5. Throws InvalidInput for a graph with no edges.
GadgetInstance buildGadget(const OrientedGraph& graph, GadgetVariant variant);

/// One center per set. Standard: coordinate (u, v) is 1 if u in V_i, -1 if
/// v in V_i, else 0. Lattice: 1 if u in V_i, else 0. Throws InvalidInput if
/// a set is not independent.
std::vector<Vector> buildCenters(const GadgetInstance& gadget, const std::vector<IndexList>& sets);

struct CompletenessCertificate {
  Clustering clustering;
  double cost = 0.0;
  std::size_t covered = 0;
  std::size_t uncovered = 0;
  /// covered * g(near) + uncovered * g(far) with near/far = 1/3 (Standard)
  /// or 0.5/1.5 (Lattice).
  double bound = 0.0;
};

/// Covered vertices go to the center of their first set, the rest to
/// cluster 0. Throws InvalidInput without sets.
CompletenessCertificate completenessCertificate(const GadgetInstance& gadget,
                                                const std::vector<IndexList>& sets,
                                                Objective objective);

/// Scans arcs in order and keeps each whose endpoints are both still in the
/// cluster, while at least `threshold` cluster vertices remain.
std::vector<Arc> greedyDisjointEdges(const OrientedGraph& graph, const IndexList& clusterVertices,
                                     std::size_t threshold = 0);

/// Lower bound per matched edge for any center: Median |A(u)_e - A(v)_e|,
/// Means half its square. With integralCenters on the Lattice variant the
/// Means constant is 2.5 (c_e restricted to integers).
double pairCertificate(GadgetVariant variant, Objective objective, bool integralCenters = false);

struct SoundnessCertificate {
  double lowerBound = 0.0;
  std::vector<std::vector<Arc>> matchings;
};

SoundnessCertificate soundnessLowerBound(const GadgetInstance& gadget, const Clustering& partition,
                                         Objective objective, bool integralCenters = false);

struct GlobalSoundness {
  /// Minimum of soundnessLowerBound over partitions into at most r parts.
  double lowerBound = 0.0;
  Clustering argmin;
  /// Exact continuous optimum by partition enumeration, when requested.
  std::optional<double> exactOptimum;
  std::optional<Clustering> exactClustering;
};

GlobalSoundness globalSoundnessLB(const GadgetInstance& gadget, std::size_t r, Objective objective,
                                  bool computeExact = true, const BruteForceOptions& options = {});

/// Lattice variant, centers restricted to Z^m: exact optimum of one cluster.
/// Clamping each center coordinate into {0, 1} never hurts, after which
/// every point is at distance 0.5 or 1.5 and the points at distance 0.5 form
/// an independent set; so the optimum is alpha g(0.5) + (n - alpha) g(1.5).
double latticeIntegralClusterCost(const GadgetInstance& gadget, const IndexList& members,
                                  Objective objective);

struct LatticeGap {
  double integralOptimum = 0.0;
  double completenessCost = 0.0;
  double ratio = 0.0;
  /// Ratio of the pair certificate to the per-point completeness cost.
  double pairRatio = 0.0;
};

/// Exact integral-center optimum over partitions into at most r parts versus
/// the cost of the supplied YES certificate.
LatticeGap latticeIntegralGap(const GadgetInstance& gadget, std::size_t r, Objective objective,
                              const std::vector<IndexList>& sets, unsigned jobs = 1);

}  // namespace hardclust
