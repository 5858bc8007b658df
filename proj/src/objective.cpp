#include "hardclust/objective.hpp"

#include <limits>
#include <string>

#include "hardclust/error.hpp"
#include "hardclust/kernels.hpp"

namespace hardclust {

std::string_view objectiveName(Objective o) {
  switch (o) {
    case Objective::Median:
      return "median";
    case Objective::Means:
      return "means";
    case Objective::Minsum:
      return "minsum";
  }
  return "unknown";
}

Objective parseObjective(std::string_view s) {
  if (s == "median") return Objective::Median;
  if (s == "means") return Objective::Means;
  if (s == "minsum") return Objective::Minsum;
  throw InvalidInput("unknown objective '" + std::string(s) + "'");
}

ObjectiveCost objectiveCost(const PointSet& points, const Clustering& clustering,
                            Objective objective) {
  if (objective == Objective::Minsum) {
    throw InvalidInput("objectiveCost: use minsumCost for the minsum objective");
  }
  if (!clustering.centers) throw InvalidInput("objectiveCost: clustering has no centers");
  clustering.validate(points.size(), points.dim());
  const auto& centers = *clustering.centers;

  ObjectiveCost out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    double best = std::numeric_limits<double>::infinity();
    double own = 0.0;
    for (std::size_t c = 0; c < centers.size(); ++c) {
      const double v = pointCost(points.distanceTo(i, centers[c]), objective);
      if (c == clustering.assignment[i]) own = v;
      if (v < best) best = v;
    }
    out.assigned += own;
    out.nearest += best;
  }
  return out;
}

double minsumCost(const FiniteMetric& metric, const Clustering& partition) {
  partition.validate(metric.size());
  double total = 0.0;
  for (const auto& members : partition.clusters()) {
    for (std::size_t a = 0; a < members.size(); ++a) {
      for (std::size_t b = a + 1; b < members.size(); ++b) total += metric(members[a], members[b]);
    }
  }
  return total;
}

double minsumCost(const PointSet& points, const Clustering& partition) {
  partition.validate(points.size());
  double total = 0.0;
  for (const auto& members : partition.clusters()) {
    for (std::size_t a = 0; a < members.size(); ++a) {
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        total += points.distance(members[a], members[b]);
      }
    }
  }
  return total;
}

PairwiseIdentity kmeansPairwiseIdentity(const PointSet& points, const Clustering& partition) {
  if (points.metric() != MetricTag::L2) {
    throw InvalidInput("kmeansPairwiseIdentity: requires an L2 point set");
  }
  partition.validate(points.size());
  const std::size_t dim = points.dim();
  const auto& l2sq = kernels::active().l2sq;

  PairwiseIdentity out{0.0, 0.0};
  for (const auto& members : partition.clusters()) {
    if (members.empty()) throw InvalidInput("kmeansPairwiseIdentity: empty cluster");
    Vector centroid(dim, 0.0);
    for (std::size_t i : members) {
      const auto p = points[i];
      for (std::size_t j = 0; j < dim; ++j) centroid[j] += p[j];
    }
    for (double& x : centroid) x /= static_cast<double>(members.size());
    for (std::size_t i : members) out.centroidCost += l2sq(points[i].data(), centroid.data(), dim);

    double pairs = 0.0;
    for (std::size_t a = 0; a < members.size(); ++a) {
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        pairs += l2sq(points[members[a]].data(), points[members[b]].data(), dim);
      }
    }
    // Ordered pairs are twice the unordered sum.
    out.pairwiseCost += (2.0 * pairs) / (2.0 * static_cast<double>(members.size()));
  }
  return out;
}

}  // namespace hardclust
