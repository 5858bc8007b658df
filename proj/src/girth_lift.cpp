#include "hardclust/girth_lift.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "hardclust/coverage.hpp"
#include "hardclust/error.hpp"

namespace hardclust {

std::vector<std::size_t> balancedTuple(std::size_t B, std::size_t l, Rng& rng) {
  if (B == 0 || l % B != 0) {
    throw InvalidInput("balancedTuple: B = " + std::to_string(B) + " must divide l = " +
                       std::to_string(l));
  }
  std::vector<std::size_t> tuple(l);
  for (std::size_t i = 0; i < l; ++i) tuple[i] = i % B;
  rng.shuffle(std::span<std::size_t>(tuple));
  return tuple;
}

double expectedCycleBound(double n, double d, double r, double t, double a, double /*B*/) {
  const double v = n * std::pow(4.0 * a * d * r, t);
  return std::isfinite(v) ? v : std::numeric_limits<double>::infinity();
}

IndexList liftSolution(const IndexList& S, std::size_t B) {
  IndexList out;
  out.reserve(S.size() * B);
  for (std::size_t v : S) {
    for (std::size_t j = 0; j < B; ++j) out.push_back(v * B + j);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Incidence graph of the lift with deletable hyperedges. Nodes 0..N-1 are
// vertices, N+e is hyperedge e.
class LiftGraph {
 public:
  LiftGraph(std::size_t vertices, const std::vector<IndexList>& edges)
      : N_(vertices), edges_(edges), alive_(edges.size(), 1), incident_(vertices) {
    for (std::size_t e = 0; e < edges.size(); ++e) {
      for (std::size_t v : edges[e]) incident_[v].push_back(e);
    }
    const std::size_t total = N_ + edges.size();
    dist_.assign(total, kNone);
    parent_.assign(total, kNone);
  }

  // Deletes until no cycle shorter than t passes through root.
  std::size_t cleanRoot(std::size_t root, std::size_t t) {
    std::size_t deleted = 0;
    while (true) {
      const auto cycle = findCycle(root, t);
      if (cycle.empty()) return deleted;
      std::size_t worst = 0;
      for (std::size_t node : cycle) {
        if (node >= N_) worst = std::max(worst, node - N_);
      }
      alive_[worst] = 0;
      ++deleted;
    }
  }

  const std::vector<char>& alive() const { return alive_; }

 private:
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  template <typename Fn>
  void forNeighbors(std::size_t u, Fn&& fn) const {
    if (u < N_) {
      for (std::size_t e : incident_[u]) {
        if (alive_[e]) fn(N_ + e);
      }
    } else if (alive_[u - N_]) {
      for (std::size_t v : edges_[u - N_]) fn(v);
    }
  }

  std::vector<std::size_t> findCycle(std::size_t root, std::size_t t) {
    std::vector<std::size_t> queue{root}, touched{root};
    dist_[root] = 0;
    std::size_t hitU = kNone, hitW = kNone;
    for (std::size_t head = 0; head < queue.size() && hitU == kNone; ++head) {
      const std::size_t u = queue[head];
      if (2 * dist_[u] >= t) break;
      forNeighbors(u, [&](std::size_t w) {
        if (hitU != kNone || w == parent_[u]) return;
        if (dist_[w] == kNone) {
          dist_[w] = dist_[u] + 1;
          parent_[w] = u;
          touched.push_back(w);
          queue.push_back(w);
        } else if (dist_[u] + dist_[w] + 1 < t) {
          hitU = u;
          hitW = w;
        }
      });
    }
    std::vector<std::size_t> cycle;
    if (hitU != kNone) {
      std::vector<std::size_t> a{hitU}, b{hitW};
      while (a.back() != root) a.push_back(parent_[a.back()]);
      while (b.back() != root) b.push_back(parent_[b.back()]);
      while (a.size() > 1 && b.size() > 1 && a[a.size() - 2] == b[b.size() - 2]) {
        a.pop_back();
        b.pop_back();
      }
      cycle = a;
      for (std::size_t i = b.size() - 1; i-- > 0;) cycle.push_back(b[i]);
    }
    for (std::size_t v : touched) {
      dist_[v] = kNone;
      parent_[v] = kNone;
    }
    return cycle;
  }

  std::size_t N_;
  const std::vector<IndexList>& edges_;
  std::vector<char> alive_;
  std::vector<IndexList> incident_;
  std::vector<std::size_t> dist_, parent_;
};

}  // namespace

LiftReport lift(const SetSystem& hypergraph, const LiftParams& params) {
  if (params.B == 0 || params.a == 0) throw InvalidInput("lift: B and a must be positive");
  if (params.t < 4 || params.t % 2 != 0) throw InvalidInput("lift: t must be even and >= 4");
  if (params.t > params.girthCap) throw InvalidInput("lift: t exceeds the girth cap");
  const std::size_t m = hypergraph.setCount();
  const std::size_t n = hypergraph.universeSize();
  const std::size_t r = m == 0 ? 0 : hypergraph.set(0).size();
  for (const auto& e : hypergraph.sets()) {
    if (e.size() != r) throw InvalidInput("lift: hypergraph is not uniform");
  }
  const std::size_t B = params.B;
  const std::size_t l = params.a * B;
  if (n * B > params.maxVertices) throw CapExceeded("lift: lifted vertex count exceeds cap");
  if (m * l > params.maxHyperedges) throw CapExceeded("lift: lifted hyperedge count exceeds cap");

  Rng rng(params.seed);
  std::vector<IndexList> edges(m * l, IndexList(r));
  for (std::size_t e = 0; e < m; ++e) {
    const auto& members = hypergraph.set(e);
    for (std::size_t pos = 0; pos < r; ++pos) {
      const auto tuple = balancedTuple(B, l, rng);
      for (std::size_t i = 0; i < l; ++i) edges[e * l + i][pos] = members[pos] * B + tuple[i];
    }
  }

  LiftReport report;
  report.preDeletionHyperedges = edges.size();
  {
    std::vector<std::size_t> deg(n * B, 0);
    for (const auto& e : edges) {
      for (std::size_t v : e) ++deg[v];
    }
    if (!deg.empty()) {
      report.minDegreeBefore = *std::min_element(deg.begin(), deg.end());
      report.maxDegreeBefore = *std::max_element(deg.begin(), deg.end());
    }
  }

  LiftGraph graph(n * B, edges);
  for (std::size_t v = 0; v < n * B; ++v) report.deletedHyperedges += graph.cleanRoot(v, params.t);

  std::vector<IndexList> surviving;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (!graph.alive()[e]) continue;
    surviving.push_back(edges[e]);
    report.origin.push_back(e / l);
  }
  report.lifted = SetSystem(n * B, std::move(surviving), r == 0 ? std::nullopt : std::optional(r));
  const auto stats = structureStats(report.lifted, params.girthCap);
  report.maxDegree = stats.maxElementDegree;
  report.girth = stats.girth;
  report.girthAchieved = !stats.girth || *stats.girth >= params.t;

  std::size_t d = 0;
  for (std::size_t deg : hypergraph.elementDegrees()) d = std::max(d, deg);
  const auto dn = static_cast<double>(n);
  report.expectedCycleBound = expectedCycleBound(dn, static_cast<double>(d), static_cast<double>(r),
                                                 static_cast<double>(params.t),
                                                 static_cast<double>(params.a), static_cast<double>(B));
  report.deletionBound = 4.0 * report.expectedCycleBound;
  return report;
}

double hitFraction(const SetSystem& hypergraph, const IndexList& vertices) {
  if (hypergraph.setCount() == 0) return 0.0;
  std::vector<char> chosen(hypergraph.universeSize(), 0);
  for (std::size_t v : vertices) {
    if (v >= chosen.size()) throw InvalidInput("hitFraction: vertex out of range");
    chosen[v] = 1;
  }
  std::size_t hit = 0;
  for (const auto& e : hypergraph.sets()) {
    hit += std::any_of(e.begin(), e.end(), [&](std::size_t v) { return chosen[v] != 0; });
  }
  return static_cast<double>(hit) / static_cast<double>(hypergraph.setCount());
}

namespace {

double bestHitFraction(const SetSystem& hypergraph, std::size_t budget, double cap) {
  if (hypergraph.setCount() == 0 || budget == 0) return 0.0;
  const auto opt = bruteForceMaxCoverage(dual(hypergraph), budget, cap);
  return static_cast<double>(opt.coverage) / static_cast<double>(hypergraph.setCount());
}

}  // namespace

TransferReport coverageTransferExperiment(const SetSystem& hypergraph, const LiftParams& params,
                                          std::size_t k, std::size_t trials,
                                          const std::vector<double>& alphas, double searchCap) {
  TransferReport report;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    LiftParams p = params;
    p.seed = params.seed + trial;
    const auto lifted = lift(hypergraph, p);
    for (double alpha : alphas) {
      TransferRow row;
      row.seed = p.seed;
      row.alpha = alpha;
      row.originalBudget = static_cast<std::size_t>(std::llround(alpha * static_cast<double>(k)));
      row.liftedBudget =
          static_cast<std::size_t>(std::llround(alpha * static_cast<double>(k * p.B)));
      row.deleted = lifted.deletedHyperedges;
      row.girthAchieved = lifted.girthAchieved;
      try {
        row.originalFraction = bestHitFraction(hypergraph, row.originalBudget, searchCap);
        row.liftedFraction = bestHitFraction(lifted.lifted, row.liftedBudget, searchCap);
      } catch (const CapExceeded&) {
        row.skipped = true;
      }
      if (!row.skipped) {
        report.maxAbsDifference =
            std::max(report.maxAbsDifference, std::abs(row.liftedFraction - row.originalFraction));
      }
      report.rows.push_back(row);
    }
  }
  return report;
}

}  // namespace hardclust
