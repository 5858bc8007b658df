#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "hardclust/set_system.hpp"

namespace hardclust {

using Arc = std::pair<std::size_t, std::size_t>;

/// Simple graph with one orientation per edge. Arcs are kept in the order
/// given; fromEdges orients u < v as (u, v) and sorts.
class OrientedGraph {
 public:
  OrientedGraph() = default;
  /// Throws InvalidInput on self-loops, out-of-range endpoints, or an edge
  /// present in both orientations (or twice).
  OrientedGraph(std::size_t n, std::vector<Arc> arcs);

  /// Lexicographic orientation of undirected edges; duplicates merged.
  static OrientedGraph fromEdges(std::size_t n, const std::vector<Arc>& edges);

  std::size_t vertexCount() const { return n_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  bool adjacent(std::size_t u, std::size_t v) const;
  const IndexList& neighbors(std::size_t v) const { return adj_[v]; }

  bool isIndependent(const IndexList& vertices) const;

 private:
  std::size_t n_ = 0;
  std::vector<Arc> arcs_;
  std::vector<IndexList> adj_;
};

/// Exact independence number of the subgraph induced by `vertices` by
/// branching (practical to about 60 vertices).
std::size_t independenceNumber(const OrientedGraph& graph, const IndexList& vertices);
std::size_t independenceNumber(const OrientedGraph& graph);

struct YesGraph {
  OrientedGraph graph;
  /// q disjoint independent sets of equal size.
  std::vector<IndexList> independentSets;
};

/// q disjoint independent sets of size floor((1 - epsilonPrime) n / q) on
/// randomly chosen vertices; every other pair is an edge with probability
/// edgeProbability.
YesGraph generateYesGraph(std::size_t q, double epsilonPrime, std::size_t n, std::uint64_t seed,
                          double edgeProbability = 0.5);

/// G(n, p) resampled until its independence number is at most
/// floor(maxAlphaFraction n). Throws CapExceeded for n > alphaCheckCap and
/// Error when the budget runs out.
OrientedGraph generateNoGraph(std::size_t n, double maxAlphaFraction, std::uint64_t seed,
                              double edgeProbability = 0.5, std::size_t budget = 10'000,
                              std::size_t alphaCheckCap = 14);

}  // namespace hardclust
