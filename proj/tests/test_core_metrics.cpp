#include <cmath>
#include <vector>

#include "doctest.h"
#include "hardclust/center.hpp"
#include "hardclust/error.hpp"
#include "hardclust/metric.hpp"
#include "hardclust/objective.hpp"
#include "hardclust/rng.hpp"
#include "oracles.hpp"

using namespace hardclust;

namespace {

PointSet randomPoints(Rng& rng, std::size_t n, std::size_t d, MetricTag m, double scale = 3.0) {
  PointSet ps(d, m);
  for (std::size_t i = 0; i < n; ++i) {
    Vector p(d);
    for (auto& x : p) {
      x = m == MetricTag::Hamming ? static_cast<double>(rng.below(2))
                                  : std::round(rng.uniform(-scale, scale) * 4.0) / 4.0;
    }
    ps.add(p);
  }
  return ps;
}

Clustering randomPartition(Rng& rng, std::size_t n, std::size_t k) {
  Clustering c;
  c.k = k;
  for (std::size_t i = 0; i < n; ++i) c.assignment.push_back(i < k ? i : rng.below(k));
  return c;
}

FiniteMetric randomMetric(Rng& rng, std::size_t n) {
  // Shortest-path closure of random weights is always a metric.
  std::vector<double> d(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) d[i * n + j] = d[j * n + i] = 1.0 + rng.below(20);
  }
  for (std::size_t l = 0; l < n; ++l) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) d[i * n + j] = std::min(d[i * n + j], d[i * n + l] + d[l * n + j]);
    }
  }
  return FiniteMetric(n, d);
}

double clusterCost(const PointSet& ps, const Vector& c, MetricTag m, Objective o) {
  double s = 0.0;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    Vector p(ps[i].begin(), ps[i].end());
    double d = 0.0;
    switch (m) {
      case MetricTag::LInf:
        d = oracle::linf(p, c);
        break;
      case MetricTag::L1:
      case MetricTag::Hamming:
        d = oracle::l1(p, c);
        break;
      case MetricTag::L2:
        d = std::sqrt(oracle::l2sq(p, c));
        break;
      case MetricTag::L2Squared:
        d = oracle::l2sq(p, c);
        break;
    }
    s += o == Objective::Means ? d * d : d;
  }
  return s;
}

}  // namespace

TEST_CASE("distance examples") {
  const Vector o{0, 0}, p{3, -4};
  CHECK(distance(o, p, MetricTag::LInf) == 4.0);
  CHECK(distance(o, p, MetricTag::L1) == 7.0);
  CHECK(distance(o, p, MetricTag::L2) == 5.0);
  CHECK(distance(o, p, MetricTag::L2Squared) == 25.0);
  for (auto m : {MetricTag::LInf, MetricTag::L1, MetricTag::L2, MetricTag::L2Squared}) {
    CHECK(distance(p, p, m) == 0.0);
  }
  CHECK(distance(Vector{1, 0, 1}, Vector{0, 0, 1}, MetricTag::Hamming) == 1.0);
  CHECK_THROWS_AS(distance(Vector{1}, Vector{1, 2}, MetricTag::L1), DimensionMismatch);
}

TEST_CASE("distance is symmetric and satisfies the triangle inequality") {
  Rng rng(5);
  for (auto m : {MetricTag::LInf, MetricTag::L1, MetricTag::L2, MetricTag::Hamming}) {
    const auto ps = randomPoints(rng, 12, 4, m);
    for (std::size_t i = 0; i < ps.size(); ++i) {
      for (std::size_t j = 0; j < ps.size(); ++j) {
        CHECK(ps.distance(i, j) == ps.distance(j, i));
        CHECK((ps.distance(i, j) == 0.0) == (ps.toVectors()[i] == ps.toVectors()[j]));
        for (std::size_t l = 0; l < ps.size(); ++l) {
          CHECK(ps.distance(i, j) <= ps.distance(i, l) + ps.distance(l, j) + 1e-12);
        }
      }
    }
  }
}

TEST_CASE("point set validation") {
  CHECK_THROWS_AS(PointSet(0, MetricTag::L1), InvalidInput);
  PointSet h(2, MetricTag::Hamming);
  CHECK_THROWS_AS(h.add(Vector{0.5, 1}), InvalidInput);
  CHECK_THROWS_AS(h.add(Vector{1}), DimensionMismatch);
  PointSet l(1, MetricTag::L1, {{0.5}});
  CHECK_THROWS_AS(l.setMetric(MetricTag::Hamming), InvalidInput);
  CHECK(parseMetric(metricName(MetricTag::L2Squared)) == MetricTag::L2Squared);
  CHECK_THROWS_AS(parseMetric("chebyshev"), InvalidInput);
}

TEST_CASE("distance matrix matches pairwise distances") {
  Rng rng(8);
  for (auto m : {MetricTag::LInf, MetricTag::L1, MetricTag::L2, MetricTag::Hamming}) {
    const auto ps = randomPoints(rng, 9, 5, m);
    const auto D = ps.distanceMatrix();
    for (std::size_t i = 0; i < 9; ++i) {
      for (std::size_t j = 0; j < 9; ++j) CHECK(D[i * 9 + j] == doctest::Approx(ps.distance(i, j)).epsilon(1e-14));
    }
  }
}

TEST_CASE("finite metric validation and triangle inequality") {
  CHECK_THROWS_AS(FiniteMetric(2, {0, 1, 2, 0}), InvalidInput);
  CHECK_THROWS_AS(FiniteMetric(2, {1, 1, 1, 0}), InvalidInput);
  CHECK_THROWS_AS(FiniteMetric(2, {0, 3, 3, 0}, true), InvalidInput);
  CHECK_THROWS_AS(FiniteMetric(2, {0, 1, 1}), InvalidInput);
  CHECK_FALSE(FiniteMetric(3, {0, 1, 5, 1, 0, 1, 5, 1, 0}).satisfiesTriangleInequality());
  Rng rng(1);
  for (int rep = 0; rep < 10; ++rep) CHECK(randomMetric(rng, 15).satisfiesTriangleInequality());
}

TEST_CASE("objective cost") {
  PointSet ps(1, MetricTag::LInf, {{0}, {4}});
  Clustering c;
  c.k = 1;
  c.assignment = {0, 0};
  c.centers = std::vector<Vector>{{2}};
  CHECK(objectiveCost(ps, c, Objective::Means).assigned == 8.0);
  CHECK(objectiveCost(ps, c, Objective::Median).assigned == 4.0);
  // Oracle: minimize (4 - x)^2 + x^2 on a grid.
  const double grid = oracle::gridMin([](double x) { return (4 - x) * (4 - x) + x * x; }, -2, 6, 8000);
  CHECK(grid == doctest::Approx(8.0).epsilon(1e-9));

  PointSet one(2, MetricTag::L2, {{1, 2}});
  Clustering own;
  own.k = 1;
  own.assignment = {0};
  own.centers = std::vector<Vector>{{1, 2}};
  CHECK(objectiveCost(one, own, Objective::Means).assigned == 0.0);

  Clustering bad = c;
  bad.centers.reset();
  CHECK_THROWS_AS(objectiveCost(ps, bad, Objective::Means), InvalidInput);
}

TEST_CASE("nearest reassignment never increases cost") {
  Rng rng(21);
  for (int rep = 0; rep < 50; ++rep) {
    const auto ps = randomPoints(rng, 10, 3, MetricTag::L1);
    auto c = randomPartition(rng, 10, 3);
    std::vector<Vector> centers;
    for (int i = 0; i < 3; ++i) centers.push_back(randomPoints(rng, 1, 3, MetricTag::L1).toVectors()[0]);
    c.centers = centers;
    for (auto o : {Objective::Median, Objective::Means}) {
      const auto cost = objectiveCost(ps, c, o);
      CHECK(cost.nearest <= cost.assigned);
    }
  }
}

TEST_CASE("clustering validation") {
  Clustering c;
  c.k = 2;
  c.assignment = {0, 2};
  CHECK_THROWS_AS(c.validate(2), InvalidInput);
  c.assignment = {0, 1};
  c.centers = std::vector<Vector>{{0.0}};
  CHECK_THROWS_AS(c.validate(2, 1), InvalidInput);
  c.centers = std::vector<Vector>{{0.0}, {1.0, 2.0}};
  CHECK_THROWS_AS(c.validate(2, 1), InvalidInput);
  c.assignment = {1, 0, 1};
  c.centers.reset();
  CHECK(c.clusters() == std::vector<std::vector<std::size_t>>{{1}, {0, 2}});
  CHECK(c.masks() == std::vector<unsigned long long>{2ULL, 5ULL});
}

TEST_CASE("minsum cost") {
  FiniteMetric m(3, {0, 1, 1, 1, 0, 1, 1, 1, 0});
  Clustering singletons{3, {0, 1, 2}, std::nullopt};
  CHECK(minsumCost(m, singletons) == 0.0);
  Clustering one{1, {0, 0, 0}, std::nullopt};
  CHECK(minsumCost(m, one) == 3.0);
  CHECK_THROWS_AS(minsumCost(m, Clustering{1, {0, 0}, std::nullopt}), InvalidInput);
}

TEST_CASE("k-means pairwise identity") {
  PointSet two(2, MetricTag::L2, {{0, 0}, {3, 4}});
  Clustering c{1, {0, 0}, std::nullopt};
  const auto id = kmeansPairwiseIdentity(two, c);
  CHECK(id.centroidCost == doctest::Approx(12.5));
  CHECK(id.pairwiseCost == doctest::Approx(12.5));

  PointSet same(3, MetricTag::L2, {{1, 1, 1}, {1, 1, 1}, {1, 1, 1}});
  const auto z = kmeansPairwiseIdentity(same, Clustering{1, {0, 0, 0}, std::nullopt});
  CHECK(z.centroidCost == 0.0);
  CHECK(z.pairwiseCost == 0.0);

  Rng rng(99);
  for (int rep = 0; rep < 200; ++rep) {
    const auto ps = randomPoints(rng, 10, 3, MetricTag::L2);
    const auto part = randomPartition(rng, 10, 3);
    const auto r = kmeansPairwiseIdentity(ps, part);
    CHECK(std::abs(r.centroidCost - r.pairwiseCost) <= 1e-9 * std::max(1.0, r.pairwiseCost));
  }

  CHECK_THROWS_AS(kmeansPairwiseIdentity(two, Clustering{2, {0, 0}, std::nullopt}), InvalidInput);
  PointSet l1(1, MetricTag::L1, {{0}});
  CHECK_THROWS_AS(kmeansPairwiseIdentity(l1, Clustering{1, {0}, std::nullopt}), InvalidInput);
}

TEST_CASE("optimal center closed-form examples") {
  PointSet pq(3, MetricTag::LInf, {{0, 1, 2}, {4, -1, 1}});
  const auto med = optimalCenter(pq, Objective::Median);
  CHECK(med.cost == doctest::Approx(4.0).epsilon(1e-7));
  const auto means = optimalCenter(pq, Objective::Means);
  CHECK(means.cost == doctest::Approx(8.0).epsilon(1e-7));
  CHECK(means.lowerBound == 8.0);

  PointSet h(2, MetricTag::Hamming, {{0, 0}, {0, 1}, {1, 1}});
  const auto hm = optimalCenter(h, Objective::Median);
  CHECK(hm.center == Vector{0, 1});
  CHECK(hm.cost == 2.0);
  Vector arg;
  CHECK(oracle::bestBinaryCenter(h.toVectors(), false, &arg) == 2.0);
  CHECK(arg == Vector{0, 1});

  PointSet single(2, MetricTag::LInf, {{1.5, -2}});
  const auto s = optimalCenter(single, Objective::Means);
  CHECK(s.cost == 0.0);
  CHECK(s.center == Vector{1.5, -2});

  CHECK_THROWS_AS(optimalCenter(PointSet(2, MetricTag::L2), Objective::Means), InvalidInput);
  CHECK_THROWS_AS(optimalCenter(pq, Objective::Minsum), InvalidInput);
}

TEST_CASE("optimal center matches search oracles") {
  Rng rng(2024);
  const std::vector<MetricTag> metrics{MetricTag::LInf, MetricTag::L1, MetricTag::L2,
                                       MetricTag::L2Squared};
  for (auto m : metrics) {
    for (auto o : {Objective::Median, Objective::Means}) {
      for (int rep = 0; rep < 8; ++rep) {
        const std::size_t n = 2 + rng.below(5);
        const std::size_t d = 1 + rng.below(2);
        const auto ps = randomPoints(rng, n, d, m);
        const auto r = optimalCenter(ps, o);
        CAPTURE(metricName(m));
        CAPTURE(objectiveName(o));
        // Reported cost is the cost at the reported center.
        CHECK(r.cost == doctest::Approx(clusterCost(ps, r.center, m, o)).epsilon(1e-9));
        CHECK(r.lowerBound <= r.cost + 1e-9);
        const double zoom = oracle::zoomMin(
            [&](const Vector& c) { return clusterCost(ps, c, m, o); }, Vector(d, 0.0), 4.0);
        CHECK(r.cost <= zoom + 1e-6 * std::max(1.0, zoom));
        CHECK(r.cost >= zoom - 1e-3 * std::max(1.0, zoom));
      }
    }
  }
}

TEST_CASE("hamming centers match binary enumeration") {
  Rng rng(4);
  for (int rep = 0; rep < 30; ++rep) {
    const auto ps = randomPoints(rng, 1 + rng.below(7), 1 + rng.below(6), MetricTag::Hamming);
    for (auto o : {Objective::Median, Objective::Means}) {
      const auto r = optimalCenter(ps, o);
      CHECK(r.cost == oracle::bestBinaryCenter(ps.toVectors(), o == Objective::Means));
    }
  }
}

TEST_CASE("L-infinity radii and direct epigraph agree") {
  Rng rng(77);
  for (int rep = 0; rep < 40; ++rep) {
    const std::size_t n = 2 + rng.below(8);
    const std::size_t d = 1 + rng.below(5);
    const auto ps = randomPoints(rng, n, d, MetricTag::LInf);
    for (auto o : {Objective::Median, Objective::Means}) {
      const auto a = optimalCenter(ps, o);
      const auto b = linfCenterDirect(ps, o);
      CHECK(std::abs(a.cost - b.cost) <= 2e-6 * std::max(1.0, a.cost));
      CHECK(a.cost >= a.lowerBound - 1e-9);
      const auto D = ps.distanceMatrix();
      const auto radii = linfRadii(D, n, o);
      CHECK(radii.cost == doctest::Approx(a.cost).epsilon(1e-6));
    }
  }
}

TEST_CASE("frechet embedding is an isometry") {
  CHECK(frechetEmbed(FiniteMetric(1, {0})).toVectors() == std::vector<Vector>{{0}});
  Rng rng(5);
  for (int rep = 0; rep < 10; ++rep) {
    const auto m = randomMetric(rng, 5 + rng.below(10));
    const auto e = frechetEmbed(m);
    CHECK(e.metric() == MetricTag::LInf);
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t j = 0; j < m.size(); ++j) CHECK(e.distance(i, j) == m(i, j));
    }
    for (int p = 0; p < 20; ++p) {
      const auto part = randomPartition(rng, m.size(), 3);
      CHECK(minsumCost(e, part) == minsumCost(m, part));
    }
  }
}
