#include "hardclust/brute_force.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <thread>

#include "hardclust/error.hpp"

namespace hardclust {

namespace {

struct Candidate {
  double cost = std::numeric_limits<double>::infinity();
  std::vector<std::size_t> encoding;

  bool betterThan(const Candidate& other) const {
    if (cost != other.cost) return cost < other.cost;
    return encoding < other.encoding;
  }
};

template <typename Fn>
void runWorkers(unsigned jobs, Fn&& fn) {
  jobs = std::max(1u, jobs);
  if (jobs == 1) {
    fn(0u);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(jobs);
  for (unsigned w = 0; w < jobs; ++w) pool.emplace_back([&fn, w] { fn(w); });
  for (auto& t : pool) t.join();
}

class PartitionSearch {
 public:
  PartitionSearch(const std::vector<double>& cost, std::size_t n, std::size_t k, bool prune)
      : cost_(cost), n_(n), k_(k), prune_(prune), assign_(n, 0), blocks_(k, 0) {}

  // Restore the state of a given prefix, then search below it.
  void searchFrom(const std::vector<std::size_t>& prefix) {
    std::fill(blocks_.begin(), blocks_.end(), 0ULL);
    used_ = 0;
    partial_ = 0.0;
    for (std::size_t i = 0; i < prefix.size(); ++i) {
      const std::size_t b = prefix[i];
      assign_[i] = b;
      partial_ += cost_[blocks_[b] | (1ULL << i)] - cost_[blocks_[b]];
      blocks_[b] |= 1ULL << i;
      used_ = std::max(used_, b + 1);
    }
    dfs(prefix.size());
  }

  const Candidate& best() const { return best_; }

 private:
  void dfs(std::size_t i) {
    if (prune_ && partial_ > best_.cost + 1e-12 * std::max(1.0, std::abs(best_.cost))) return;
    if (i == n_) {
      if (partial_ < best_.cost) {
        best_.cost = partial_;
        best_.encoding = assign_;
      }
      return;
    }
    const std::size_t limit = std::min(used_ + 1, k_);
    for (std::size_t b = 0; b < limit; ++b) {
      const unsigned long long before = blocks_[b];
      const unsigned long long after = before | (1ULL << i);
      const double saved = partial_;
      const std::size_t savedUsed = used_;
      partial_ += cost_[after] - cost_[before];
      blocks_[b] = after;
      assign_[i] = b;
      used_ = std::max(used_, b + 1);
      dfs(i + 1);
      blocks_[b] = before;
      partial_ = saved;
      used_ = savedUsed;
    }
  }

  const std::vector<double>& cost_;
  std::size_t n_, k_;
  bool prune_;
  std::vector<std::size_t> assign_;
  std::vector<unsigned long long> blocks_;
  std::size_t used_ = 0;
  double partial_ = 0.0;
  Candidate best_;
};

void collectPrefixes(std::size_t depth, std::size_t k, std::vector<std::size_t>& cur,
                     std::size_t used, std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == depth) {
    out.push_back(cur);
    return;
  }
  for (std::size_t b = 0; b < std::min(used + 1, k); ++b) {
    cur.push_back(b);
    collectPrefixes(depth, k, cur, std::max(used, b + 1), out);
    cur.pop_back();
  }
}

std::vector<double> pairSumTable(std::size_t n, const std::vector<double>& dist) {
  std::vector<double> cost(std::size_t{1} << n, 0.0);
  for (std::size_t mask = 1; mask < cost.size(); ++mask) {
    const std::size_t low = static_cast<std::size_t>(__builtin_ctzll(mask));
    const std::size_t rest = mask & (mask - 1);
    double add = 0.0;
    for (std::size_t j = low + 1; j < n; ++j) {
      if (rest >> j & 1U) add += dist[low * n + j];
    }
    cost[mask] = cost[rest] + add;
  }
  return cost;
}

BruteForceResult dataPointSearch(const std::vector<double>& dist, std::size_t n, std::size_t k,
                                 Objective objective, const BruteForceOptions& options) {
  if (objective == Objective::Minsum) {
    throw InvalidInput("bruteForceCluster: DataPoints mode does not apply to minsum");
  }
  if (n > options.tupleCap) {
    throw CapExceeded("bruteForceCluster: n = " + std::to_string(n) + " exceeds tuple cap " +
                      std::to_string(options.tupleCap));
  }
  const std::size_t m = std::min(k, n);
  std::vector<std::vector<std::size_t>> combos;
  std::vector<std::size_t> c(m);
  for (std::size_t i = 0; i < m; ++i) c[i] = i;
  while (true) {
    combos.push_back(c);
    std::size_t i = m;
    while (i > 0 && c[i - 1] == n - m + i - 1) --i;
    if (i == 0) break;
    ++c[i - 1];
    for (std::size_t j = i; j < m; ++j) c[j] = c[j - 1] + 1;
  }

  const unsigned jobs = std::max(1u, options.jobs);
  std::vector<Candidate> bests(jobs);
  runWorkers(jobs, [&](unsigned w) {
    for (std::size_t idx = w; idx < combos.size(); idx += jobs) {
      double total = 0.0;
      for (std::size_t p = 0; p < n; ++p) {
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t ci : combos[idx]) best = std::min(best, pointCost(dist[p * n + ci], objective));
        total += best;
      }
      Candidate cand{total, combos[idx]};
      if (cand.betterThan(bests[w])) bests[w] = std::move(cand);
    }
  });
  Candidate best = bests[0];
  for (const auto& b : bests) {
    if (b.betterThan(best)) best = b;
  }

  BruteForceResult out;
  out.cost = best.cost;
  out.centerIndices = best.encoding;
  while (out.centerIndices.size() < k) {
    out.centerIndices.push_back(out.centerIndices.empty() ? 0 : out.centerIndices.front());
  }
  out.clustering.k = k;
  out.clustering.assignment.assign(n, 0);
  for (std::size_t p = 0; p < n; ++p) {
    double bestCost = std::numeric_limits<double>::infinity();
    for (std::size_t slot = 0; slot < best.encoding.size(); ++slot) {
      const double v = pointCost(dist[p * n + best.encoding[slot]], objective);
      if (v < bestCost) {
        bestCost = v;
        out.clustering.assignment[p] = slot;
      }
    }
  }
  return out;
}

void checkK(std::size_t k) {
  if (k == 0) throw InvalidInput("bruteForceCluster: k must be positive");
}

void checkPartitionCap(std::size_t n, const BruteForceOptions& options) {
  if (n > options.partitionCap || n > 30) {
    throw CapExceeded("bruteForceCluster: n = " + std::to_string(n) + " exceeds partition cap " +
                      std::to_string(options.partitionCap));
  }
}

}  // namespace

PartitionOptimum minimumPartition(const std::vector<double>& subsetCost, std::size_t n,
                                  std::size_t k, unsigned jobs, bool monotone) {
  if (subsetCost.size() != (std::size_t{1} << n)) {
    throw InvalidInput("minimumPartition: cost table must have 2^n entries");
  }
  if (k == 0) throw InvalidInput("minimumPartition: k must be positive");
  if (n == 0) return {{}, 0.0};

  jobs = std::max(1u, jobs);
  std::vector<std::vector<std::size_t>> prefixes;
  std::vector<std::size_t> cur;
  collectPrefixes(jobs == 1 ? 0 : std::min<std::size_t>(n, 6), k, cur, 0, prefixes);

  std::vector<Candidate> bests(jobs);
  runWorkers(jobs, [&](unsigned w) {
    PartitionSearch search(subsetCost, n, k, monotone);
    for (std::size_t i = w; i < prefixes.size(); i += jobs) {
      search.searchFrom(prefixes[i]);
    }
    bests[w] = search.best();
  });
  Candidate best = bests[0];
  for (const auto& b : bests) {
    if (b.betterThan(best)) best = b;
  }
  std::vector<unsigned long long> blocks(k, 0);
  for (std::size_t i = 0; i < n; ++i) blocks[best.encoding[i]] |= 1ULL << i;
  double total = 0.0;
  for (auto mask : blocks) total += subsetCost[mask];
  return {best.encoding, total};
}

BruteForceResult bruteForceCluster(const PointSet& points, std::size_t k, Objective objective,
                                   CenterMode mode, const BruteForceOptions& options) {
  checkK(k);
  const std::size_t n = points.size();
  if (mode == CenterMode::DataPoints) {
    auto out = dataPointSearch(points.distanceMatrix(), n, k, objective, options);
    std::vector<Vector> centers;
    for (std::size_t idx : out.centerIndices) {
      const auto p = points[idx];
      centers.emplace_back(p.begin(), p.end());
    }
    if (n > 0) out.clustering.centers = std::move(centers);
    return out;
  }

  checkPartitionCap(n, options);
  BruteForceResult out;
  out.clustering.k = k;
  if (objective == Objective::Minsum) {
    const auto part = minimumPartition(pairSumTable(n, points.distanceMatrix()), n, k, options.jobs);
    out.clustering.assignment = part.assignment;
    out.cost = part.cost;
    return out;
  }

  const std::size_t masks = std::size_t{1} << n;
  std::vector<double> cost(masks, 0.0);
  std::vector<Vector> center(masks);
  const unsigned jobs = std::max(1u, options.jobs);
  runWorkers(jobs, [&](unsigned w) {
    std::vector<std::size_t> members;
    for (std::size_t mask = 1 + w; mask < masks; mask += jobs) {
      members.clear();
      for (std::size_t i = 0; i < n; ++i) {
        if (mask >> i & 1U) members.push_back(i);
      }
      auto res = optimalCenter(points.select(members), points.metric(), objective, options.center);
      cost[mask] = res.cost;
      center[mask] = std::move(res.center);
    }
  });

  const auto part = minimumPartition(cost, n, k, options.jobs);
  out.clustering.assignment = part.assignment;
  out.cost = part.cost;
  std::vector<unsigned long long> blockMask(k, 0);
  for (std::size_t i = 0; i < n; ++i) blockMask[part.assignment[i]] |= 1ULL << i;
  std::vector<Vector> centers(k);
  for (std::size_t b = 0; b < k; ++b) {
    if (blockMask[b]) {
      centers[b] = center[blockMask[b]];
    } else if (n > 0) {
      const auto p = points[0];
      centers[b].assign(p.begin(), p.end());
    } else {
      centers[b].assign(points.dim(), 0.0);
    }
  }
  out.clustering.centers = std::move(centers);
  return out;
}

BruteForceResult bruteForceCluster(const FiniteMetric& metric, std::size_t k, Objective objective,
                                   CenterMode mode, const BruteForceOptions& options) {
  checkK(k);
  const std::size_t n = metric.size();
  if (mode == CenterMode::DataPoints) return dataPointSearch(metric.matrix(), n, k, objective, options);
  if (objective != Objective::Minsum) {
    throw InvalidInput(
        "bruteForceCluster: continuous centers need coordinates; embed the metric first");
  }
  checkPartitionCap(n, options);
  const auto part = minimumPartition(pairSumTable(n, metric.matrix()), n, k, options.jobs);
  BruteForceResult out;
  out.clustering.k = k;
  out.clustering.assignment = part.assignment;
  out.cost = part.cost;
  return out;
}

}  // namespace hardclust
