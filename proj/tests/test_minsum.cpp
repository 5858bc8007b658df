#include <cmath>
#include <limits>
#include <vector>

#include "doctest.h"
#include "hardclust/coverage.hpp"
#include "hardclust/error.hpp"
#include "hardclust/minsum.hpp"
#include "hardclust/rng.hpp"
#include "oracles.hpp"

using namespace hardclust;

namespace {

SetSystem randomSparse(Rng& rng, std::size_t n, std::size_t m) {
  std::vector<IndexList> sets;
  for (std::size_t i = 0; i < m; ++i) {
    IndexList s;
    for (std::size_t v = 0; v < n; ++v) {
      if (rng.bernoulli(0.3)) s.push_back(v);
    }
    if (s.size() < 2) s = {std::min<std::size_t>(rng.below(n - 1), n - 2), n - 1};
    sets.push_back(s);
  }
  return SetSystem(n, sets);
}

double minsumOracle(const FiniteMetric& m, std::size_t k) {
  double best = std::numeric_limits<double>::infinity();
  oracle::forEachPartition(m.size(), k, [&](const std::vector<std::size_t>& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = i + 1; j < a.size(); ++j) {
        if (a[i] == a[j]) s += m(i, j);
      }
    }
    best = std::min(best, s);
  });
  return best;
}

}  // namespace

TEST_CASE("minsum instance") {
  const auto whole = buildMinsumInstance(SetSystem(4, {{0, 1, 2, 3}}));
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) CHECK(whole.metric(i, j) == (i == j ? 0.0 : 1.0));
  }
  const auto two = buildMinsumInstance(SetSystem(4, {{0, 1}, {2, 3}}));
  CHECK(two.metric(0, 1) == 1.0);
  CHECK(two.metric(2, 3) == 1.0);
  CHECK(two.metric(0, 2) == 2.0);
  CHECK(two.metric(1, 3) == 2.0);
  CHECK(two.metric.twoValued());
  CHECK(two.metric.satisfiesTriangleInequality());
  CHECK(two.isolated.empty());
  const auto iso = buildMinsumInstance(SetSystem(3, {{0, 1}}));
  CHECK(iso.isolated == IndexList{2});
  CHECK(iso.metric(2, 0) == 2.0);
}

TEST_CASE("clique partitions cost the sum of their binomials") {
  // Three disjoint cliques of sizes 3, 2, 4 plus sparse cross sets.
  const SetSystem s(9, {{0, 1, 2}, {3, 4}, {5, 6, 7, 8}, {2, 3}, {4, 8}});
  const auto inst = buildMinsumInstance(s);
  Clustering part{3, {0, 0, 0, 1, 1, 2, 2, 2, 2}, std::nullopt};
  CHECK(minsumCost(inst.metric, part) == 3.0 + 1.0 + 6.0);
  CHECK(minsumCost(inst.metric, part) <= 3.0 * 6.0);
}

TEST_CASE("tree charge bound") {
  CHECK(treeChargeBound(6, 2) == 6.0);
  CHECK(treeChargeBound(5, 5) == 12.5);
  CHECK(treeChargeBound(4, 0) == 0.0);
  CHECK_THROWS_AS(treeChargeBound(3, 4), InvalidInput);
  CHECK_THROWS_AS(treeChargeBound(3, -1), InvalidInput);
}

TEST_CASE("tree charge bound holds on acyclic induced systems") {
  Rng rng(3);
  std::size_t acyclicSeen = 0;
  for (int rep = 0; rep < 300; ++rep) {
    const std::size_t n = 3 + rng.below(6);
    const auto s = randomSparse(rng, n, 1 + rng.below(4));
    // Every vertex subset of size >= 2 induces a trace system.
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      if (__builtin_popcount(mask) < 2) continue;
      std::vector<IndexList> traces;
      std::size_t rMax = 0;
      for (const auto& e : s.sets()) {
        IndexList t;
        for (auto v : e) {
          if (mask >> v & 1u) t.push_back(v);
        }
        rMax = std::max(rMax, t.size());
        if (t.size() >= 2) traces.push_back(t);
      }
      if (traces.empty() || oracle::incidenceGirth(n, traces) != 0) continue;
      ++acyclicSeen;
      double pairs = 0.0;
      for (const auto& t : traces) pairs += double(t.size()) * double(t.size() - 1) / 2.0;
      CHECK(pairs <= treeChargeBound(__builtin_popcount(mask), double(rMax)) + 1e-12);
    }
  }
  CHECK(acyclicSeen > 100);
}

TEST_CASE("f functions") {
  for (double n : {1.0, 2.0, 7.5}) {
    const auto v = fFunctions(n, n / 2.0);
    CHECK(v.f1 == doctest::Approx(0.75 * n * n));
    CHECK(v.f2 == doctest::Approx(0.75 * n * n));
  }
  const auto one = fFunctions(1, 1);
  CHECK(one.f1 == 0.5);
  CHECK(one.f2 == 0.5);
  CHECK(one.f == 0.5);
  for (double n : {0.5, 1.0, 3.0}) {
    double prev = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= 100; ++i) {
      const double f = fFunctions(n, n * i / 100.0).f;
      CHECK(f <= prev + 1e-12);
      prev = f;
    }
  }
}

TEST_CASE("soundness constant") {
  const double c = solveSoundnessConstant(1e-10);
  CHECK(std::abs(soundnessResidual(c)) <= 1e-10);
  CHECK(std::abs(c - 0.145) <= 1e-3);
  // Independent route through Lambert W.
  const double viaW = std::log(9.0 / 7.0) - oracle::lambertW(9.0 / (28.0 * std::exp(1.0)));
  CHECK(std::abs(solveSoundnessConstant(1e-15) - viaW) <= 1e-9);
  CHECK(soundnessResidual(0.0) > 0.0);
  CHECK(soundnessResidual(std::log(9.0 / 7.0)) < 0.0);
  CHECK_THROWS_AS(solveSoundnessConstant(0.0), InvalidInput);
}

TEST_CASE("soundness profile") {
  const SoundnessProfile p(solveSoundnessConstant());
  CHECK(p.n(0.0) == 1.0);
  CHECK(p.d1() == doctest::Approx(std::log(1.5) + p.c()).epsilon(1e-15));
  CHECK(p.d2() == doctest::Approx(std::log(1.75) + p.c()).epsilon(1e-15));
  const double e = 1e-12;
  for (double b : {p.c(), p.d1(), p.d2()}) CHECK(std::abs(p.n(b - e) - p.n(b + e)) <= 1e-9);
  CHECK(p.n(p.d1()) == doctest::Approx(4.0 / 3.0 * std::exp(-p.c())).epsilon(1e-12));
  CHECK(std::abs(p.massClosedForm() - 1.0) <= 1e-8);
}

TEST_CASE("adaptive simpson") {
  CHECK(adaptiveSimpson([](double x) { return std::exp(x); }, 0, 1, 1e-12) ==
        doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-12));
  CHECK(adaptiveSimpson([](double x) { return std::abs(x - 0.3); }, 0, 1, 1e-10) ==
        doctest::Approx(0.045 + 0.245).epsilon(1e-9));
}

TEST_CASE("soundness integral") {
  const double c = solveSoundnessConstant();
  const auto s = soundnessIntegral(c);
  CHECK(std::abs(s.quadrature - 0.7079) <= 5e-4);
  CHECK(std::abs(s.quadrature - s.closedForm) <= 1e-7);
  CHECK(std::abs(s.massQuadrature - 1.0) <= 1e-8);
  CHECK(std::abs(s.massClosedForm - 1.0) <= 1e-8);
  CHECK(s.gapRatio >= 1.415);
  // Independent midpoint rule on max(f1, f2) of the profile.
  const SoundnessProfile p(c);
  const int N = 400000;
  double mid = 0.0;
  for (int i = 0; i < N; ++i) {
    const double a = (i + 0.5) / N;
    mid += fFunctions(p.n(a), p.r(a)).f / N;
  }
  CHECK(std::abs(mid - s.quadrature) <= 1e-8);
}

TEST_CASE("minsum constants bundle") {
  const auto k = minsumConstants();
  CHECK(k.c >= 0.144);
  CHECK(k.c <= 0.146);
  CHECK(k.d1 == doctest::Approx(std::log(1.5) + k.c));
  CHECK(k.d2 == doctest::Approx(std::log(1.75) + k.c));
  CHECK(std::abs(k.massCheck - 1.0) <= 1e-8);
  CHECK(k.gapRatio == doctest::Approx(k.integralValue / 0.5));
  CHECK(std::abs(k.residual) <= 1e-12);
}

TEST_CASE("gap experiment examples") {
  const SetSystem yes(5, {{0, 1, 2}, {3, 4}});
  Clustering cert{2, {0, 0, 0, 1, 1}, std::nullopt};
  const auto r = minsumGapExperiment(yes, 2, cert);
  CHECK(r.usedCertificate);
  CHECK(r.completenessUB == 4.0);
  CHECK(r.soundnessLB == 4.0);
  CHECK(r.ratio == 1.0);

  const SetSystem six(6, {{0, 1, 2}, {3, 4, 5}, {0, 3}, {1, 4}, {2, 5}});
  const auto g = minsumGapExperiment(six, 2);
  CHECK(g.soundnessLB == minsumOracle(buildMinsumInstance(six).metric, 2));
  CHECK(g.soundnessLB == 6.0);
  CHECK_FALSE(g.usedCertificate);
}

TEST_CASE("exact optimum dominates the case-one bound") {
  Rng rng(8);
  std::size_t acyclic = 0;
  for (int rep = 0; rep < 40; ++rep) {
    const std::size_t n = 5 + rng.below(5);
    const auto s = randomSparse(rng, n, 2 + rng.below(3));
    const std::size_t k = 2 + rng.below(2);
    const auto r = minsumGapExperiment(s, k);
    CHECK(r.soundnessLB == minsumOracle(buildMinsumInstance(s).metric, k));
    CHECK(r.soundnessLB >= r.caseOne.bound);
    // The bound is valid for every partition, not only the optimal one.
    for (int p = 0; p < 10; ++p) {
      Clustering part{k, {}, std::nullopt};
      for (std::size_t v = 0; v < n; ++v) part.assignment.push_back(rng.below(k));
      const auto b = caseOneBound(s, part);
      CHECK(minsumCost(buildMinsumInstance(s).metric, part) >= b.bound);
      acyclic += b.acyclicClusters;
    }
  }
  CHECK(acyclic > 0);
}
