#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "hardclust/metric.hpp"
#include "hardclust/set_system.hpp"

namespace hardclust {

/// Distinct z-subsets of [n] with a budget k.
struct JohnsonInstance {
  std::size_t n = 0;
  std::size_t z = 2;
  std::vector<IndexList> sets;
  std::size_t k = 1;

  /// Throws InvalidInput unless z >= 2, every set is a strictly increasing
  /// z-subset of [n] and sets are distinct.
  void validate() const;
  /// |E| / k.
  double density() const { return k == 0 ? 0.0 : static_cast<double>(sets.size()) / k; }
};

/// Indices of the sets that contain the (z-1)-set T.
IndexList covJohnson(const IndexList& T, const JohnsonInstance& instance);

/// 0/1 indicator of S in R^n.
Vector indicatorVector(const IndexList& S, std::size_t n);

/// One indicator point per set, tagged with the given metric.
PointSet indicatorEmbed(const JohnsonInstance& instance, MetricTag metric = MetricTag::L2);

struct IndicatorCompleteness {
  bool allCovered = false;
  /// Distances from each set to tau(T) of the first T covering it.
  double minL2 = 0.0, maxL2 = 0.0, minL1 = 0.0, maxL1 = 0.0;
  std::vector<std::size_t> assignment;
};

/// Centers tau(T_i) for a family of (z-1)-sets.
IndicatorCompleteness indicatorCompleteness(const JohnsonInstance& instance,
                                            const std::vector<IndexList>& Ts);

struct RoundingCheck {
  std::size_t symmetricDifference = 0;
  double l2Squared = 0.0;
  double l1 = 0.0;
  bool l2Holds = false;
  bool l1Holds = false;
};

struct RoundedCenter {
  Vector rounded;
  std::vector<RoundingCheck> checks;
  bool allHold = true;
};

/// c'_u = 1 iff c_u >= 0.5. For each supplied S checks
/// |tau(S) - c|_2^2 >= |S ^ S'| / 4 and |tau(S) - c|_1 >= |S ^ S'| / 2.
/// Throws InvalidInput for coordinates outside [0, 1].
RoundedCenter roundCenter(const Vector& c, const std::vector<IndexList>& sets = {});

enum class LemmaNorm { L1, L2 };
LemmaNorm parseLemmaNorm(const std::string& s);

struct LemmaCheck {
  std::vector<double> y;
  std::vector<bool> premise;
  bool allPremises = false;
  double bound = 0.0;
  bool boundHolds = true;
  /// Every premise holds but |E| exceeds the bound.
  bool violation = false;
};

/// y(e) = sum_{v in e} (1 - x_v)^p + sum_{v not in e} x_v^p with p = 2 (L2)
/// or 1 (L1). Premise y(e) <= 1 + q (r - 1) - eps with q = 1/4 or 1/2;
/// bound (8r/eps^2 + r)^r or (2r/eps + r)^r. Throws InvalidInput for a
/// non-uniform hypergraph, x outside [0, 0.5], or an uncovered vertex.
LemmaCheck hypergraphLemmaCheck(const SetSystem& hypergraph, const std::vector<double>& x,
                                double eps, LemmaNorm norm);

struct LemmaSearch {
  std::size_t trials = 0;
  std::size_t premiseSatisfying = 0;
  std::size_t violations = 0;
  std::size_t maxEdgesSatisfying = 0;
};

/// Seeded random instances with r <= 3, n <= 12, eps in {0.05, 0.10, ..., 0.40}.
LemmaSearch lemmaSearch(std::size_t trials, std::uint64_t seed, LemmaNorm norm);

struct NamedConstant {
  std::string name;
  std::string formula;
  double value;
};

std::vector<NamedConstant> gapConstants();

struct BucketDiagnostic {
  /// histogram[d] = number of sets with |S ^ S'| = d.
  std::vector<std::size_t> histogram;
  std::size_t dominant = 0;
};

/// |S ^ S'| over a cluster of sets against the rounding S' of a center.
BucketDiagnostic bucketDiagnostic(const JohnsonInstance& instance, const IndexList& cluster,
                                  const Vector& center);

}  // namespace hardclust
