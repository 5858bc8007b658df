#include <algorithm>
#include <vector>

#include "doctest.h"
#include "hardclust/coverage.hpp"
#include "hardclust/error.hpp"
#include "hardclust/rng.hpp"
#include "oracles.hpp"

using namespace hardclust;

namespace {

SetSystem randomSystem(Rng& rng, std::size_t n, std::size_t m, double p = 0.3) {
  std::vector<IndexList> sets;
  for (std::size_t i = 0; i < m; ++i) {
    IndexList s;
    for (std::size_t e = 0; e < n; ++e) {
      if (rng.bernoulli(p)) s.push_back(e);
    }
    if (s.empty()) s.push_back(rng.below(n));
    sets.push_back(s);
  }
  return SetSystem(n, sets);
}

std::size_t maxIntersection(const SetSystem& s) {
  std::size_t best = 0;
  for (std::size_t i = 0; i < s.setCount(); ++i) {
    for (std::size_t j = i + 1; j < s.setCount(); ++j) {
      IndexList both;
      std::set_intersection(s.set(i).begin(), s.set(i).end(), s.set(j).begin(), s.set(j).end(),
                            std::back_inserter(both));
      best = std::max(best, both.size());
    }
  }
  return best;
}

}  // namespace

TEST_CASE("set system validation") {
  CHECK_THROWS_AS(SetSystem(3, {{0, 3}}), InvalidInput);
  CHECK_THROWS_AS(SetSystem(3, {{1, 0}}), InvalidInput);
  CHECK_THROWS_AS(SetSystem(3, {{1, 1}}), InvalidInput);
  CHECK_THROWS_AS(SetSystem(3, {{}}), InvalidInput);
  CHECK_THROWS_AS(SetSystem(3, {{0, 1}, {2}}, 2), InvalidInput);
  CHECK(SetSystem(3, {{}}, std::nullopt, true).hasEmptySet());
  const SetSystem dup(3, {{0, 1}, {0, 1}});
  CHECK(dup.setCount() == 2);
  CHECK(dup.elementDegrees() == std::vector<std::size_t>{2, 2, 0});
}

TEST_CASE("covered") {
  const SetSystem s(4, {{0, 1}, {2, 3}, {0, 2}});
  CHECK(covered(s, IndexList{}) == 0);
  CHECK(covered(s, IndexList{0, 1}) == 4);
  CHECK(covered(s, IndexList{0, 2}) == 3);
  CHECK_THROWS_AS(covered(s, IndexList{3}), InvalidInput);
}

TEST_CASE("greedy examples") {
  const SetSystem single(3, {{0, 2}});
  CHECK(greedyMaxCoverage(single, 1).chosen == IndexList{0});
  const SetSystem s(4, {{0, 1, 2}, {0, 3}, {1, 3}});
  CHECK(greedyMaxCoverage(s, 1).chosen == IndexList{0});
  const auto padded = greedyMaxCoverage(s, 5);
  CHECK(padded.padded);
  CHECK(padded.coverage == 4);
  CHECK_THROWS_AS(greedyMaxCoverage(s, 0), InvalidInput);
  const SetSystem tie(4, {{0, 1}, {2, 3}});
  CHECK(greedyMaxCoverage(tie, 1).chosen == IndexList{0});
}

TEST_CASE("brute force examples") {
  const SetSystem s(5, {{0}, {1, 2}, {3, 4}, {0, 1}});
  CHECK(bruteForceMaxCoverage(s, 4).coverage == 5);
  CHECK(bruteForceMaxCoverage(s, 4).chosen.size() == 4);
  const SetSystem disjoint(6, {{0}, {1, 2, 3}, {4, 5}});
  CHECK(bruteForceMaxCoverage(disjoint, 2).chosen == IndexList{1, 2});
  const SetSystem big(30, [] {
    std::vector<IndexList> v;
    for (std::size_t i = 0; i < 30; ++i) v.push_back({i});
    return v;
  }());
  CHECK_THROWS_AS(bruteForceMaxCoverage(big, 10), CapExceeded);
}

TEST_CASE("brute force agrees with subset enumeration and dominates greedy") {
  Rng rng(12);
  for (int rep = 0; rep < 40; ++rep) {
    const auto s = randomSystem(rng, 1 + rng.below(12), 1 + rng.below(8));
    const std::size_t k = 1 + rng.below(3);
    const auto opt = bruteForceMaxCoverage(s, k);
    CHECK(opt.coverage == oracle::maxCoverage(s.universeSize(), s.sets(), k));
    CHECK(covered(s, opt.chosen) == opt.coverage);
    const auto g = greedyMaxCoverage(s, k);
    CHECK(g.coverage <= opt.coverage);
    CHECK(static_cast<double>(g.coverage) >= 0.632 * static_cast<double>(opt.coverage));
  }
}

TEST_CASE("coverage is monotone and submodular") {
  Rng rng(13);
  for (int rep = 0; rep < 100; ++rep) {
    const auto s = randomSystem(rng, 10, 8);
    IndexList A, B;
    for (std::size_t i = 0; i < 8; ++i) {
      const bool inB = rng.bernoulli(0.5);
      if (inB) B.push_back(i);
      if (inB && rng.bernoulli(0.5)) A.push_back(i);
    }
    const std::size_t x = rng.below(8);
    auto Ax = A, Bx = B;
    Ax.push_back(x);
    Bx.push_back(x);
    const long gainA = long(covered(s, Ax)) - long(covered(s, A));
    const long gainB = long(covered(s, Bx)) - long(covered(s, B));
    CHECK(gainA >= gainB);
    CHECK(covered(s, A) <= covered(s, B));
  }
}

TEST_CASE("incidence girth examples") {
  CHECK(incidenceGirth(SetSystem(3, {{0, 1}, {0, 1, 2}})) == 4u);
  CHECK_FALSE(incidenceGirth(SetSystem(5, {{0, 1}, {1, 2}, {2, 3, 4}})).has_value());
  // A triangle of 2-sets is a 6-cycle.
  CHECK(incidenceGirth(SetSystem(3, {{0, 1}, {1, 2}, {0, 2}})) == 6u);
  CHECK_FALSE(incidenceGirth(SetSystem(3, {{0, 1}, {1, 2}, {0, 2}}), 4).has_value());
  const auto cycle = shortestIncidenceCycle(SetSystem(3, {{0, 1}, {1, 2}, {0, 2}}));
  CHECK(cycle.size() == 6);
}

TEST_CASE("girth matches the edge-removal oracle and the intersection criterion") {
  Rng rng(14);
  for (int rep = 0; rep < 60; ++rep) {
    const auto s = randomSystem(rng, 4 + rng.below(8), 2 + rng.below(6), 0.25);
    const auto g = incidenceGirth(s, 40);
    const std::size_t o = oracle::incidenceGirth(s.universeSize(), s.sets());
    CHECK(g.value_or(0) == o);
    const bool above4 = !g || *g > 4;
    CHECK(above4 == (maxIntersection(s) <= 1));
    CHECK(structureStats(s).maxPairwiseIntersection == maxIntersection(s));
    const auto cycle = shortestIncidenceCycle(s, 40);
    CHECK(cycle.size() == o);
    // Consecutive nodes alternate between elements and sets and are incident.
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      std::size_t a = cycle[i], b = cycle[(i + 1) % cycle.size()];
      if (a > b) std::swap(a, b);
      REQUIRE(a < s.universeSize());
      REQUIRE(b >= s.universeSize());
      const auto& set = s.set(b - s.universeSize());
      CHECK(std::binary_search(set.begin(), set.end(), a));
    }
  }
}

TEST_CASE("structure stats") {
  const auto st = structureStats(SetSystem(3, {{0, 1, 2}}));
  CHECK(st.maxElementDegree == 1);
  CHECK(st.maxSetSize == 3);
  CHECK_FALSE(st.girth.has_value());
  Rng rng(15);
  for (int rep = 0; rep < 20; ++rep) {
    const auto s = randomSystem(rng, 8, 6);
    const auto a = structureStats(s);
    const auto b = structureStats(dual(s));
    CHECK(a.maxElementDegree == b.maxSetSize);
    CHECK(a.maxSetSize == b.maxElementDegree);
    CHECK(a.girth == b.girth);
  }
}

TEST_CASE("dual") {
  const SetSystem id(3, {{0}, {1}, {2}});
  CHECK(dual(id) == id);
  const auto d = dual(SetSystem(3, {{0, 1}, {1, 2}}));
  CHECK(d.universeSize() == 2);
  CHECK(d.sets() == std::vector<IndexList>{{0}, {0, 1}, {1}});
  const auto iso = dual(SetSystem(3, {{0, 1}}));
  CHECK(iso.allowsEmpty());
  CHECK(iso.hasEmptySet());
  Rng rng(16);
  for (int rep = 0; rep < 20; ++rep) {
    const auto s = randomSystem(rng, 7, 5);
    CHECK(dual(dual(s)).sets() == s.sets());
  }
}

TEST_CASE("binomial") {
  CHECK(binomial(5, 2) == 10.0);
  CHECK(binomial(3, 5) == 0.0);
  CHECK(binomial(36, 6) == 1947792.0);
}
