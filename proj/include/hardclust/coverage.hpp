#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hardclust/set_system.hpp"

namespace hardclust {

/// |union of the chosen sets|. Throws InvalidInput on an out-of-range index.
std::size_t covered(const SetSystem& system, std::span<const std::size_t> chosen);

struct GreedyCoverage {
  IndexList chosen;
  std::size_t coverage = 0;
  /// k exceeded the number of sets; every set was taken.
  bool padded = false;
};

/// Standard greedy: repeatedly take the set with the largest marginal gain,
/// smallest index on ties. Throws InvalidInput if k == 0.
GreedyCoverage greedyMaxCoverage(const SetSystem& system, std::size_t k);

struct CoverageOptimum {
  IndexList chosen;
  std::size_t coverage = 0;
};

/// Exact optimum over all k-subsets (all sets when k >= |sets|); the first
/// optimal subset in lexicographic order wins. Throws CapExceeded when
/// C(|sets|, k) > cap.
CoverageOptimum bruteForceMaxCoverage(const SetSystem& system, std::size_t k,
                                      double cap = 1e6);

/// Binomial coefficient in floating point (exact below 2^53).
double binomial(std::size_t n, std::size_t k);

/// Girth of the element-set incidence graph, or nullopt if it is acyclic
/// or every cycle is longer than cap.
std::optional<std::size_t> incidenceGirth(const SetSystem& system, std::size_t cap = 20);

/// One shortest incidence cycle (length <= cap), as alternating node ids:
/// elements are 0..n-1 and set i is n+i. Empty when none exists.
std::vector<std::size_t> shortestIncidenceCycle(const SetSystem& system, std::size_t cap = 20);

struct StructureStats {
  std::size_t maxElementDegree = 0;
  std::size_t maxSetSize = 0;
  std::size_t maxPairwiseIntersection = 0;
  std::optional<std::size_t> girth;
};

StructureStats structureStats(const SetSystem& system, std::size_t girthCap = 20);

/// Element i becomes the set of indices of sets containing i. An isolated
/// element yields an empty set, so the result has allowsEmpty() set in
/// that case.
SetSystem dual(const SetSystem& system);

}  // namespace hardclust
