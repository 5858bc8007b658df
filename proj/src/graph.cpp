#include "hardclust/graph.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "hardclust/error.hpp"
#include "hardclust/rng.hpp"

namespace hardclust {

OrientedGraph::OrientedGraph(std::size_t n, std::vector<Arc> arcs)
    : n_(n), arcs_(std::move(arcs)), adj_(n) {
  for (const auto& [u, v] : arcs_) {
    if (u >= n_ || v >= n_) throw InvalidInput("arc endpoint out of range");
    if (u == v) throw InvalidInput("self-loop at vertex " + std::to_string(u));
    if (std::find(adj_[u].begin(), adj_[u].end(), v) != adj_[u].end()) {
      throw InvalidInput("edge {" + std::to_string(u) + "," + std::to_string(v) +
                         "} appears more than once");
    }
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
}

OrientedGraph OrientedGraph::fromEdges(std::size_t n, const std::vector<Arc>& edges) {
  std::vector<Arc> arcs;
  arcs.reserve(edges.size());
  for (auto [u, v] : edges) arcs.emplace_back(std::min(u, v), std::max(u, v));
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  return OrientedGraph(n, std::move(arcs));
}

bool OrientedGraph::adjacent(std::size_t u, std::size_t v) const {
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

bool OrientedGraph::isIndependent(const IndexList& vertices) const {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (adjacent(vertices[i], vertices[j])) return false;
    }
  }
  return true;
}

namespace {

using Mask = std::uint64_t;

std::size_t alphaRec(const std::vector<Mask>& nbr, Mask live) {
  if (live == 0) return 0;
  // Take isolated or degree-one vertices greedily; branch on max degree.
  std::size_t best = 64, bestDeg = 0;
  for (Mask m = live; m; m &= m - 1) {
    const auto v = static_cast<std::size_t>(std::countr_zero(m));
    const auto deg = static_cast<std::size_t>(std::popcount(nbr[v] & live));
    if (deg <= 1) return 1 + alphaRec(nbr, live & ~(nbr[v] | (Mask{1} << v)));
    if (best == 64 || deg > bestDeg) {
      best = v;
      bestDeg = deg;
    }
  }
  const Mask without = live & ~(Mask{1} << best);
  const std::size_t skip = alphaRec(nbr, without);
  const std::size_t take = 1 + alphaRec(nbr, without & ~nbr[best]);
  return std::max(skip, take);
}

}  // namespace

std::size_t independenceNumber(const OrientedGraph& graph, const IndexList& vertices) {
  if (vertices.size() > 64) throw CapExceeded("independenceNumber: more than 64 vertices");
  std::vector<Mask> nbr(vertices.size(), 0);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = 0; j < vertices.size(); ++j) {
      if (i != j && graph.adjacent(vertices[i], vertices[j])) nbr[i] |= Mask{1} << j;
    }
  }
  const Mask all = vertices.size() == 64 ? ~Mask{0} : (Mask{1} << vertices.size()) - 1;
  return alphaRec(nbr, all);
}

std::size_t independenceNumber(const OrientedGraph& graph) {
  IndexList all(graph.vertexCount());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return independenceNumber(graph, all);
}

YesGraph generateYesGraph(std::size_t q, double epsilonPrime, std::size_t n, std::uint64_t seed,
                          double edgeProbability) {
  if (q == 0 || n == 0) throw InvalidInput("generateYesGraph: q and n must be positive");
  if (epsilonPrime < 0.0 || epsilonPrime >= 1.0) {
    throw InvalidInput("generateYesGraph: epsilonPrime must lie in [0, 1)");
  }
  const auto size = static_cast<std::size_t>(std::floor((1.0 - epsilonPrime) * n / q + 1e-12));
  if (size == 0) throw InvalidInput("generateYesGraph: independent sets would be empty");
  Rng rng(seed);
  std::vector<std::size_t> label(n);
  for (std::size_t i = 0; i < n; ++i) label[i] = i;
  rng.shuffle(std::span<std::size_t>(label));

  constexpr std::size_t kNoGroup = static_cast<std::size_t>(-1);
  std::vector<std::size_t> group(n, kNoGroup);
  YesGraph out;
  out.independentSets.resize(q);
  for (std::size_t g = 0; g < q; ++g) {
    for (std::size_t i = 0; i < size; ++i) {
      const std::size_t v = label[g * size + i];
      group[v] = g;
      out.independentSets[g].push_back(v);
    }
    std::sort(out.independentSets[g].begin(), out.independentSets[g].end());
  }
  std::vector<Arc> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      const bool same = group[u] != kNoGroup && group[u] == group[v];
      if (!same && rng.bernoulli(edgeProbability)) edges.emplace_back(u, v);
    }
  }
  out.graph = OrientedGraph::fromEdges(n, edges);
  return out;
}

OrientedGraph generateNoGraph(std::size_t n, double maxAlphaFraction, std::uint64_t seed,
                              double edgeProbability, std::size_t budget,
                              std::size_t alphaCheckCap) {
  if (n > alphaCheckCap) {
    throw CapExceeded("generateNoGraph: n = " + std::to_string(n) + " exceeds the check cap " +
                      std::to_string(alphaCheckCap));
  }
  const auto limit = static_cast<std::size_t>(std::floor(maxAlphaFraction * n + 1e-12));
  Rng rng(seed);
  for (std::size_t attempt = 0; attempt < budget; ++attempt) {
    std::vector<Arc> edges;
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = u + 1; v < n; ++v) {
        if (rng.bernoulli(edgeProbability)) edges.emplace_back(u, v);
      }
    }
    auto g = OrientedGraph::fromEdges(n, edges);
    if (independenceNumber(g) <= limit) return g;
  }
  throw Error("generateNoGraph: resampling budget exhausted");
}

}  // namespace hardclust
