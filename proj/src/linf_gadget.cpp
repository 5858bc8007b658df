#include "hardclust/linf_gadget.hpp"

#include <algorithm>
#include <string>

#include "hardclust/error.hpp"

namespace hardclust {

std::string_view variantName(GadgetVariant v) {
  return v == GadgetVariant::Lattice ? "lattice" : "standard";
}

GadgetVariant parseVariant(std::string_view s) {
  if (s == "standard") return GadgetVariant::Standard;
  if (s == "lattice") return GadgetVariant::Lattice;
  throw InvalidInput("unknown gadget variant '" + std::string(s) + "'");
}

GadgetInstance buildGadget(const OrientedGraph& graph, GadgetVariant variant) {
  const auto& arcs = graph.arcs();
  if (arcs.empty()) throw InvalidInput("buildGadget: graph has no edges");
  const bool lattice = variant == GadgetVariant::Lattice;
  const double head = lattice ? 1.5 : 2.0;
  const double tail = lattice ? -0.5 : -2.0;
  const double other = lattice ? 0.5 : 0.0;

  const std::size_t m = arcs.size();
  std::vector<Vector> pts(graph.vertexCount(), Vector(m, other));
  for (std::size_t e = 0; e < m; ++e) {
    pts[arcs[e].first][e] = head;
    pts[arcs[e].second][e] = tail;
  }
  GadgetInstance g;
  g.graph = graph;
  g.points = PointSet(m, MetricTag::LInf, pts);
  g.variant = variant;
  return g;
}

std::vector<Vector> buildCenters(const GadgetInstance& gadget, const std::vector<IndexList>& sets) {
  const auto& arcs = gadget.graph.arcs();
  const std::size_t n = gadget.graph.vertexCount();
  const bool lattice = gadget.variant == GadgetVariant::Lattice;
  std::vector<Vector> centers;
  centers.reserve(sets.size());
  std::vector<char> member(n);
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t v : sets[i]) {
      if (v >= n) throw InvalidInput("buildCenters: vertex out of range");
    }
    if (!gadget.graph.isIndependent(sets[i])) {
      throw InvalidInput("buildCenters: set " + std::to_string(i) + " is not independent");
    }
    std::fill(member.begin(), member.end(), 0);
    for (std::size_t v : sets[i]) member[v] = 1;
    Vector c(arcs.size(), 0.0);
    for (std::size_t e = 0; e < arcs.size(); ++e) {
      if (member[arcs[e].first]) {
        c[e] = 1.0;
      } else if (member[arcs[e].second] && !lattice) {
        c[e] = -1.0;
      }
    }
    centers.push_back(std::move(c));
  }
  return centers;
}

CompletenessCertificate completenessCertificate(const GadgetInstance& gadget,
                                                const std::vector<IndexList>& sets,
                                                Objective objective) {
  if (sets.empty()) throw InvalidInput("completenessCertificate: no YES certificate");
  if (objective == Objective::Minsum) {
    throw InvalidInput("completenessCertificate: objective must be median or means");
  }
  const std::size_t n = gadget.graph.vertexCount();
  CompletenessCertificate out;
  out.clustering.k = sets.size();
  out.clustering.assignment.assign(n, 0);
  std::vector<char> seen(n, 0);
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t v : sets[i]) {
      if (v < n && !seen[v]) {
        seen[v] = 1;
        out.clustering.assignment[v] = i;
      }
    }
  }
  out.clustering.centers = buildCenters(gadget, sets);
  for (char s : seen) (s ? out.covered : out.uncovered)++;
  out.cost = objectiveCost(gadget.points, out.clustering, objective).assigned;
  const bool lattice = gadget.variant == GadgetVariant::Lattice;
  out.bound = static_cast<double>(out.covered) * pointCost(lattice ? 0.5 : 1.0, objective) +
              static_cast<double>(out.uncovered) * pointCost(lattice ? 1.5 : 3.0, objective);
  return out;
}

std::vector<Arc> greedyDisjointEdges(const OrientedGraph& graph, const IndexList& clusterVertices,
                                     std::size_t threshold) {
  std::vector<char> live(graph.vertexCount(), 0);
  std::size_t remaining = 0;
  for (std::size_t v : clusterVertices) {
    if (v >= live.size()) throw InvalidInput("greedyDisjointEdges: vertex out of range");
    if (!live[v]) {
      live[v] = 1;
      ++remaining;
    }
  }
  std::vector<Arc> matching;
  for (const auto& [u, v] : graph.arcs()) {
    if (remaining < std::max<std::size_t>(threshold, 2)) break;
    if (live[u] && live[v]) {
      matching.emplace_back(u, v);
      live[u] = live[v] = 0;
      remaining -= 2;
    }
  }
  return matching;
}

double pairCertificate(GadgetVariant variant, Objective objective, bool integralCenters) {
  if (objective == Objective::Minsum) throw InvalidInput("pairCertificate: no centers for minsum");
  const double gap = variant == GadgetVariant::Lattice ? 2.0 : 4.0;
  if (objective == Objective::Median) return gap;
  // Lattice coordinates 1.5 and -0.5 have midpoint 0.5, which is not an integer.
  if (integralCenters && variant == GadgetVariant::Lattice) return 2.5;
  return gap * gap / 2.0;
}

SoundnessCertificate soundnessLowerBound(const GadgetInstance& gadget, const Clustering& partition,
                                         Objective objective, bool integralCenters) {
  partition.validate(gadget.graph.vertexCount());
  const double per = pairCertificate(gadget.variant, objective, integralCenters);
  SoundnessCertificate out;
  for (const auto& members : partition.clusters()) {
    auto matching = greedyDisjointEdges(gadget.graph, members, 0);
    out.lowerBound += per * static_cast<double>(matching.size());
    out.matchings.push_back(std::move(matching));
  }
  return out;
}

namespace {

IndexList maskMembers(std::size_t mask, std::size_t n) {
  IndexList members;
  for (std::size_t i = 0; i < n; ++i) {
    if (mask >> i & 1U) members.push_back(i);
  }
  return members;
}

}  // namespace

GlobalSoundness globalSoundnessLB(const GadgetInstance& gadget, std::size_t r, Objective objective,
                                  bool computeExact, const BruteForceOptions& options) {
  const std::size_t n = gadget.graph.vertexCount();
  if (n > options.partitionCap) {
    throw CapExceeded("globalSoundnessLB: n = " + std::to_string(n) + " exceeds partition cap");
  }
  if (r == 0) throw InvalidInput("globalSoundnessLB: r must be positive");
  const double per = pairCertificate(gadget.variant, objective);
  std::vector<double> cost(std::size_t{1} << n, 0.0);
  for (std::size_t mask = 1; mask < cost.size(); ++mask) {
    cost[mask] = per * static_cast<double>(greedyDisjointEdges(gadget.graph, maskMembers(mask, n)).size());
  }
  // A greedy matching can shrink when a vertex is added, so no pruning.
  const auto part = minimumPartition(cost, n, r, options.jobs, false);

  GlobalSoundness out;
  out.lowerBound = part.cost;
  out.argmin.k = r;
  out.argmin.assignment = part.assignment;
  if (computeExact) {
    auto exact = bruteForceCluster(gadget.points, r, objective, CenterMode::Continuous, options);
    out.exactOptimum = exact.cost;
    out.exactClustering = std::move(exact.clustering);
  }
  return out;
}

double latticeIntegralClusterCost(const GadgetInstance& gadget, const IndexList& members,
                                  Objective objective) {
  if (gadget.variant != GadgetVariant::Lattice) {
    throw InvalidInput("latticeIntegralClusterCost: requires the lattice variant");
  }
  if (members.empty()) return 0.0;
  const auto alpha = static_cast<double>(independenceNumber(gadget.graph, members));
  const auto size = static_cast<double>(members.size());
  return alpha * pointCost(0.5, objective) + (size - alpha) * pointCost(1.5, objective);
}

LatticeGap latticeIntegralGap(const GadgetInstance& gadget, std::size_t r, Objective objective,
                              const std::vector<IndexList>& sets, unsigned jobs) {
  const std::size_t n = gadget.graph.vertexCount();
  if (n > 20) throw CapExceeded("latticeIntegralGap: more than 20 vertices");
  std::vector<double> cost(std::size_t{1} << n, 0.0);
  for (std::size_t mask = 1; mask < cost.size(); ++mask) {
    cost[mask] = latticeIntegralClusterCost(gadget, maskMembers(mask, n), objective);
  }
  LatticeGap out;
  out.integralOptimum = minimumPartition(cost, n, r, jobs).cost;
  out.completenessCost = completenessCertificate(gadget, sets, objective).cost;
  out.ratio = out.completenessCost > 0.0 ? out.integralOptimum / out.completenessCost : 0.0;
  out.pairRatio = pairCertificate(GadgetVariant::Lattice, objective, true) /
                  (2.0 * pointCost(0.5, objective));
  return out;
}

}  // namespace hardclust
