#include "hardclust/coverage.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include "hardclust/error.hpp"

namespace hardclust {

namespace {

using Words = std::vector<std::uint64_t>;

Words toBits(const IndexList& s, std::size_t n) {
  Words w((n + 63) / 64, 0);
  for (std::size_t e : s) w[e / 64] |= 1ULL << (e % 64);
  return w;
}

std::size_t popcount(const Words& w) {
  std::size_t c = 0;
  for (auto x : w) c += static_cast<std::size_t>(std::popcount(x));
  return c;
}

void checkIndex(const SetSystem& system, std::size_t i) {
  if (i >= system.setCount()) {
    throw InvalidInput("set index " + std::to_string(i) + " out of range");
  }
}

// Incidence graph: elements 0..n-1, set i is node n+i.
std::vector<IndexList> incidenceAdjacency(const SetSystem& system) {
  const std::size_t n = system.universeSize();
  std::vector<IndexList> adj(n + system.setCount());
  for (std::size_t i = 0; i < system.setCount(); ++i) {
    for (std::size_t e : system.set(i)) {
      adj[e].push_back(n + i);
      adj[n + i].push_back(e);
    }
  }
  return adj;
}

struct CycleHit {
  std::size_t length = std::numeric_limits<std::size_t>::max();
  std::size_t root = 0, u = 0, w = 0;
};

// Shortest cycle over all roots, exploring no deeper than cap/2. Records the
// first hit of minimum length together with its BFS tree for reconstruction.
CycleHit shortestCycle(const std::vector<IndexList>& adj, std::size_t cap,
                       std::vector<std::size_t>* parentOut) {
  const std::size_t none = std::numeric_limits<std::size_t>::max();
  const std::size_t N = adj.size();
  std::vector<std::size_t> dist(N, none), parent(N, none), touched, queue;
  CycleHit best;
  for (std::size_t root = 0; root < N; ++root) {
    queue.clear();
    queue.push_back(root);
    dist[root] = 0;
    touched.push_back(root);
    bool improved = false;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::size_t u = queue[head];
      if (2 * dist[u] + 1 > std::min(cap, best.length)) break;
      for (std::size_t w : adj[u]) {
        if (w == parent[u]) continue;
        if (dist[w] == none) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          touched.push_back(w);
          queue.push_back(w);
        } else {
          const std::size_t len = dist[u] + dist[w] + 1;
          if (len <= cap && len < best.length) {
            best = {len, root, u, w};
            improved = true;
          }
        }
      }
    }
    if (improved && parentOut) *parentOut = parent;
    for (std::size_t v : touched) {
      dist[v] = none;
      parent[v] = none;
    }
    touched.clear();
  }
  return best;
}

}  // namespace

std::size_t covered(const SetSystem& system, std::span<const std::size_t> chosen) {
  std::vector<char> hit(system.universeSize(), 0);
  std::size_t count = 0;
  for (std::size_t i : chosen) {
    checkIndex(system, i);
    for (std::size_t e : system.set(i)) {
      if (!hit[e]) {
        hit[e] = 1;
        ++count;
      }
    }
  }
  return count;
}

GreedyCoverage greedyMaxCoverage(const SetSystem& system, std::size_t k) {
  if (k == 0) throw InvalidInput("greedyMaxCoverage: k must be positive");
  GreedyCoverage out;
  const std::size_t m = system.setCount();
  out.padded = k > m;
  std::vector<char> hit(system.universeSize(), 0), taken(m, 0);
  for (std::size_t step = 0; step < std::min(k, m); ++step) {
    std::size_t bestSet = m, bestGain = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (taken[i]) continue;
      std::size_t gain = 0;
      for (std::size_t e : system.set(i)) gain += !hit[e];
      if (bestSet == m || gain > bestGain) {
        bestSet = i;
        bestGain = gain;
      }
    }
    taken[bestSet] = 1;
    out.chosen.push_back(bestSet);
    for (std::size_t e : system.set(bestSet)) hit[e] = 1;
    out.coverage += bestGain;
  }
  return out;
}

double binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0.0;
  k = std::min(k, n - k);
  double r = 1.0;
  for (std::size_t i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
  return std::round(r);
}

CoverageOptimum bruteForceMaxCoverage(const SetSystem& system, std::size_t k, double cap) {
  const std::size_t m = system.setCount();
  const std::size_t n = system.universeSize();
  CoverageOptimum out;
  if (k >= m) {
    for (std::size_t i = 0; i < m; ++i) out.chosen.push_back(i);
    out.coverage = covered(system, out.chosen);
    return out;
  }
  if (k == 0) return out;
  if (binomial(m, k) > cap) {
    throw CapExceeded("bruteForceMaxCoverage: C(" + std::to_string(m) + "," + std::to_string(k) +
                      ") exceeds cap");
  }

  std::vector<Words> bits;
  bits.reserve(m);
  for (const auto& s : system.sets()) bits.push_back(toBits(s, n));
  const std::size_t words = (n + 63) / 64;

  // Depth-first over increasing index tuples with running unions per level.
  std::vector<Words> level(k + 1, Words(words, 0));
  IndexList cur(k);
  std::size_t best = 0;
  IndexList bestChosen;
  bool found = false;

  auto recurse = [&](auto&& self, std::size_t depth, std::size_t start) -> bool {
    if (depth == k) {
      const std::size_t c = popcount(level[k]);
      if (!found || c > best) {
        best = c;
        bestChosen = cur;
        found = true;
      }
      return best == n;  // nothing can beat full coverage
    }
    for (std::size_t i = start; i + (k - depth) <= m; ++i) {
      cur[depth] = i;
      for (std::size_t w = 0; w < words; ++w) level[depth + 1][w] = level[depth][w] | bits[i][w];
      if (self(self, depth + 1, i + 1)) return true;
    }
    return false;
  };
  recurse(recurse, 0, 0);
  out.chosen = bestChosen;
  out.coverage = best;
  return out;
}

std::optional<std::size_t> incidenceGirth(const SetSystem& system, std::size_t cap) {
  const auto hit = shortestCycle(incidenceAdjacency(system), cap, nullptr);
  if (hit.length == std::numeric_limits<std::size_t>::max()) return std::nullopt;
  return hit.length;
}

std::vector<std::size_t> shortestIncidenceCycle(const SetSystem& system, std::size_t cap) {
  std::vector<std::size_t> parent;
  const auto adj = incidenceAdjacency(system);
  const auto hit = shortestCycle(adj, cap, &parent);
  if (hit.length == std::numeric_limits<std::size_t>::max()) return {};
  // Walk both endpoints to the root and cut at their lowest common ancestor.
  std::vector<std::size_t> a{hit.u}, b{hit.w};
  while (a.back() != hit.root) a.push_back(parent[a.back()]);
  while (b.back() != hit.root) b.push_back(parent[b.back()]);
  while (a.size() > 1 && b.size() > 1 && a[a.size() - 2] == b[b.size() - 2]) {
    a.pop_back();
    b.pop_back();
  }
  std::vector<std::size_t> cycle(a.begin(), a.end());
  for (std::size_t i = b.size() - 1; i-- > 0;) cycle.push_back(b[i]);
  return cycle;
}

StructureStats structureStats(const SetSystem& system, std::size_t girthCap) {
  StructureStats st;
  for (std::size_t d : system.elementDegrees()) st.maxElementDegree = std::max(st.maxElementDegree, d);
  for (const auto& s : system.sets()) st.maxSetSize = std::max(st.maxSetSize, s.size());
  const auto inc = system.incidence();
  std::vector<std::size_t> count(system.setCount(), 0);
  std::vector<std::size_t> touched;
  for (std::size_t a = 0; a < system.setCount(); ++a) {
    for (std::size_t e : system.set(a)) {
      for (std::size_t b : inc[e]) {
        if (b <= a) continue;
        if (count[b]++ == 0) touched.push_back(b);
        st.maxPairwiseIntersection = std::max(st.maxPairwiseIntersection, count[b]);
      }
    }
    for (std::size_t b : touched) count[b] = 0;
    touched.clear();
  }
  st.girth = incidenceGirth(system, girthCap);
  return st;
}

SetSystem dual(const SetSystem& system) {
  auto inc = system.incidence();
  bool empty = false;
  for (const auto& s : inc) empty = empty || s.empty();
  return SetSystem(system.setCount(), std::move(inc), std::nullopt, empty);
}

}  // namespace hardclust
