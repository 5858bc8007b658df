#include <limits>
#include <vector>

#include "doctest.h"
#include "hardclust/brute_force.hpp"
#include "hardclust/center.hpp"
#include "hardclust/error.hpp"
#include "hardclust/rng.hpp"
#include "oracles.hpp"

using namespace hardclust;

namespace {

PointSet randomPoints(Rng& rng, std::size_t n, std::size_t d, MetricTag m) {
  PointSet ps(d, m);
  for (std::size_t i = 0; i < n; ++i) {
    Vector p(d);
    for (auto& x : p) x = static_cast<double>(rng.below(9)) - 4.0;
    ps.add(p);
  }
  return ps;
}

FiniteMetric twoValued(Rng& rng, std::size_t n) {
  std::vector<double> d(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) d[i * n + j] = d[j * n + i] = rng.bernoulli(0.4) ? 1 : 2;
  }
  return FiniteMetric(n, d, true);
}

// Enumerates partitions independently and charges each block its optimal
// center cost (memoized per block mask).
double partitionOracle(const PointSet& ps, std::size_t k, Objective o) {
  const std::size_t n = ps.size();
  std::vector<double> memo(1ULL << n, -1.0);
  double best = std::numeric_limits<double>::infinity();
  oracle::forEachPartition(n, k, [&](const std::vector<std::size_t>& a) {
    std::vector<unsigned long long> masks(k, 0);
    for (std::size_t i = 0; i < n; ++i) masks[a[i]] |= 1ULL << i;
    double total = 0.0;
    for (auto mask : masks) {
      if (!mask) continue;
      if (memo[mask] < 0) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < n; ++i) {
          if (mask >> i & 1ULL) idx.push_back(i);
        }
        memo[mask] = optimalCenter(ps.select(idx), o).cost;
      }
      total += memo[mask];
    }
    best = std::min(best, total);
  });
  return best;
}

}  // namespace

TEST_CASE("k = n costs nothing") {
  Rng rng(1);
  const auto ps = randomPoints(rng, 6, 2, MetricTag::LInf);
  for (auto o : {Objective::Median, Objective::Means}) {
    CHECK(bruteForceCluster(ps, 6, o, CenterMode::Continuous).cost == 0.0);
    CHECK(bruteForceCluster(ps, 6, o, CenterMode::DataPoints).cost == 0.0);
  }
}

TEST_CASE("four point two-valued minsum example") {
  FiniteMetric m(4, {0, 1, 2, 2, 1, 0, 2, 2, 2, 2, 0, 1, 2, 2, 1, 0}, true);
  const auto r = bruteForceCluster(m, 2, Objective::Minsum, CenterMode::Continuous);
  CHECK(r.cost == 2.0);
  CHECK(r.clustering.assignment == std::vector<std::size_t>{0, 0, 1, 1});
  // Two-part partitions of four points: 2^3 - 1 = 7, plus the single block.
  CHECK(oracle::stirlingPartitionsAtMostK(4, 2) == 8);
}

TEST_CASE("k = 1 L2 means equals pairwise identity") {
  Rng rng(3);
  for (int rep = 0; rep < 10; ++rep) {
    const auto ps = randomPoints(rng, 7, 3, MetricTag::L2);
    const auto r = bruteForceCluster(ps, 1, Objective::Means, CenterMode::Continuous);
    const auto id = kmeansPairwiseIdentity(ps, r.clustering);
    CHECK(r.cost == doctest::Approx(id.pairwiseCost).epsilon(1e-12));
  }
}

TEST_CASE("continuous brute force matches an independent partition oracle") {
  Rng rng(17);
  for (auto m : {MetricTag::LInf, MetricTag::L1, MetricTag::L2, MetricTag::Hamming}) {
    for (int rep = 0; rep < 4; ++rep) {
      auto ps = randomPoints(rng, 6, 2, m == MetricTag::Hamming ? MetricTag::L1 : m);
      if (m == MetricTag::Hamming) {
        PointSet h(3, MetricTag::Hamming);
        for (std::size_t i = 0; i < 6; ++i) h.add(Vector{double(rng.below(2)), double(rng.below(2)), double(rng.below(2))});
        ps = h;
      }
      for (auto o : {Objective::Median, Objective::Means}) {
        const std::size_t k = 1 + rng.below(3);
        const auto r = bruteForceCluster(ps, k, o, CenterMode::Continuous);
        CHECK(r.cost == doctest::Approx(partitionOracle(ps, k, o)).epsilon(1e-9));
        CHECK(r.clustering.centers.has_value());
      }
    }
  }
}

TEST_CASE("minsum brute force matches the partition oracle") {
  Rng rng(23);
  for (int rep = 0; rep < 10; ++rep) {
    const auto m = twoValued(rng, 7);
    const std::size_t k = 2 + rng.below(2);
    double best = std::numeric_limits<double>::infinity();
    oracle::forEachPartition(7, k, [&](const std::vector<std::size_t>& a) {
      best = std::min(best, minsumCost(m, Clustering{k, a, std::nullopt}));
    });
    CHECK(bruteForceCluster(m, k, Objective::Minsum, CenterMode::Continuous).cost == best);
  }
}

TEST_CASE("continuous never exceeds data points, data points within 2x / 4x") {
  Rng rng(31);
  for (auto m : {MetricTag::LInf, MetricTag::L1, MetricTag::L2}) {
    for (int rep = 0; rep < 6; ++rep) {
      const auto ps = randomPoints(rng, 7, 2, m);
      for (auto o : {Objective::Median, Objective::Means}) {
        const std::size_t k = 1 + rng.below(2);
        const double cont = bruteForceCluster(ps, k, o, CenterMode::Continuous).cost;
        const double disc = bruteForceCluster(ps, k, o, CenterMode::DataPoints).cost;
        CHECK(cont <= disc + 1e-7);
        CHECK(disc <= (o == Objective::Median ? 2.0 : 4.0) * cont + 1e-7);
      }
    }
  }
}

TEST_CASE("results do not depend on the worker count") {
  Rng rng(41);
  for (int rep = 0; rep < 5; ++rep) {
    const auto ps = randomPoints(rng, 9, 2, MetricTag::LInf);
    for (auto mode : {CenterMode::Continuous, CenterMode::DataPoints}) {
      BruteForceOptions one;
      BruteForceOptions many;
      many.jobs = 4;
      const auto a = bruteForceCluster(ps, 3, Objective::Means, mode, one);
      const auto b = bruteForceCluster(ps, 3, Objective::Means, mode, many);
      CHECK(a.cost == b.cost);
      CHECK(a.clustering.assignment == b.clustering.assignment);
      CHECK(a.centerIndices == b.centerIndices);
    }
  }
}

TEST_CASE("ties go to the lexicographically smallest encoding") {
  // Four identical points: every partition into <= 2 parts costs 0.
  PointSet ps(1, MetricTag::L1, {{1}, {1}, {1}, {1}});
  const auto r = bruteForceCluster(ps, 2, Objective::Median, CenterMode::Continuous);
  CHECK(r.clustering.assignment == std::vector<std::size_t>{0, 0, 0, 0});
  const auto d = bruteForceCluster(ps, 2, Objective::Median, CenterMode::DataPoints);
  CHECK(d.centerIndices == std::vector<std::size_t>{0, 1});
}

TEST_CASE("minimum partition over a cost table") {
  // Cost of a block: its size squared; best split of 4 points into 2 parts is 2 + 2.
  std::vector<double> cost(16);
  for (unsigned m = 0; m < 16; ++m) cost[m] = __builtin_popcount(m) * __builtin_popcount(m);
  const auto r = minimumPartition(cost, 4, 2);
  CHECK(r.cost == 8.0);
  const auto s = minimumPartition(cost, 4, 2, 3, false);
  CHECK(s.cost == 8.0);
  CHECK(s.assignment == r.assignment);
}

TEST_CASE("caps and modes") {
  Rng rng(2);
  const auto big = randomPoints(rng, 13, 1, MetricTag::L1);
  CHECK_THROWS_AS(bruteForceCluster(big, 2, Objective::Median, CenterMode::Continuous), CapExceeded);
  BruteForceOptions opt;
  opt.tupleCap = 12;
  CHECK_THROWS_AS(bruteForceCluster(big, 2, Objective::Median, CenterMode::DataPoints, opt), CapExceeded);
  FiniteMetric m(2, {0, 1, 1, 0}, true);
  CHECK_THROWS_AS(bruteForceCluster(m, 1, Objective::Means, CenterMode::Continuous), InvalidInput);
  CHECK_THROWS_AS(bruteForceCluster(big, 1, Objective::Minsum, CenterMode::DataPoints), InvalidInput);
  CHECK(bruteForceCluster(m, 1, Objective::Median, CenterMode::DataPoints).cost == 1.0);
}
