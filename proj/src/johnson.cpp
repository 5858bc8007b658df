#include "hardclust/johnson.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "hardclust/error.hpp"
#include "hardclust/rng.hpp"

namespace hardclust {

void JohnsonInstance::validate() const {
  if (z < 2) throw InvalidInput("johnson instance: z must be at least 2");
  std::set<IndexList> seen;
  for (const auto& s : sets) {
    if (s.size() != z) throw InvalidInput("johnson instance: set of wrong size");
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] >= n || (i > 0 && s[i] <= s[i - 1])) {
        throw InvalidInput("johnson instance: sets must be increasing subsets of [n]");
      }
    }
    if (!seen.insert(s).second) throw InvalidInput("johnson instance: duplicate set");
  }
}

IndexList covJohnson(const IndexList& T, const JohnsonInstance& instance) {
  if (T.size() + 1 != instance.z) {
    throw InvalidInput("covJohnson: |T| must be z - 1 = " + std::to_string(instance.z - 1));
  }
  IndexList sortedT = T;
  std::sort(sortedT.begin(), sortedT.end());
  IndexList out;
  for (std::size_t i = 0; i < instance.sets.size(); ++i) {
    const auto& S = instance.sets[i];
    if (std::includes(S.begin(), S.end(), sortedT.begin(), sortedT.end())) out.push_back(i);
  }
  return out;
}

Vector indicatorVector(const IndexList& S, std::size_t n) {
  Vector v(n, 0.0);
  for (std::size_t e : S) {
    if (e >= n) throw InvalidInput("indicatorVector: element out of range");
    v[e] = 1.0;
  }
  return v;
}

PointSet indicatorEmbed(const JohnsonInstance& instance, MetricTag metric) {
  PointSet out(instance.n, metric);
  for (const auto& s : instance.sets) out.add(indicatorVector(s, instance.n));
  return out;
}

IndicatorCompleteness indicatorCompleteness(const JohnsonInstance& instance,
                                            const std::vector<IndexList>& Ts) {
  IndicatorCompleteness out;
  const std::size_t none = static_cast<std::size_t>(-1);
  out.assignment.assign(instance.sets.size(), none);
  for (std::size_t i = 0; i < Ts.size(); ++i) {
    for (std::size_t s : covJohnson(Ts[i], instance)) {
      if (out.assignment[s] == none) out.assignment[s] = i;
    }
  }
  out.allCovered = std::none_of(out.assignment.begin(), out.assignment.end(),
                                [&](std::size_t a) { return a == none; });
  bool first = true;
  for (std::size_t s = 0; s < instance.sets.size(); ++s) {
    if (out.assignment[s] == none) continue;
    const auto p = indicatorVector(instance.sets[s], instance.n);
    const auto c = indicatorVector(Ts[out.assignment[s]], instance.n);
    const double l2 = distance(p, c, MetricTag::L2);
    const double l1 = distance(p, c, MetricTag::L1);
    if (first) {
      out.minL2 = out.maxL2 = l2;
      out.minL1 = out.maxL1 = l1;
      first = false;
    }
    out.minL2 = std::min(out.minL2, l2);
    out.maxL2 = std::max(out.maxL2, l2);
    out.minL1 = std::min(out.minL1, l1);
    out.maxL1 = std::max(out.maxL1, l1);
  }
  return out;
}

RoundedCenter roundCenter(const Vector& c, const std::vector<IndexList>& sets) {
  RoundedCenter out;
  out.rounded.resize(c.size());
  for (std::size_t u = 0; u < c.size(); ++u) {
    if (!(c[u] >= 0.0 && c[u] <= 1.0)) {
      throw InvalidInput("roundCenter: coordinate " + std::to_string(u) + " outside [0, 1]");
    }
    out.rounded[u] = c[u] >= 0.5 ? 1.0 : 0.0;
  }
  for (const auto& S : sets) {
    const auto tau = indicatorVector(S, c.size());
    RoundingCheck chk;
    for (std::size_t u = 0; u < c.size(); ++u) {
      chk.symmetricDifference += tau[u] != out.rounded[u];
      const double d = tau[u] - c[u];
      chk.l2Squared += d * d;
      chk.l1 += std::abs(d);
    }
    const auto sd = static_cast<double>(chk.symmetricDifference);
    chk.l2Holds = chk.l2Squared >= sd / 4.0;
    chk.l1Holds = chk.l1 >= sd / 2.0;
    out.allHold = out.allHold && chk.l2Holds && chk.l1Holds;
    out.checks.push_back(chk);
  }
  return out;
}

LemmaNorm parseLemmaNorm(const std::string& s) {
  if (s == "l1") return LemmaNorm::L1;
  if (s == "l2") return LemmaNorm::L2;
  throw InvalidInput("unknown norm '" + s + "' (expected l1 or l2)");
}

LemmaCheck hypergraphLemmaCheck(const SetSystem& hypergraph, const std::vector<double>& x,
                                double eps, LemmaNorm norm) {
  const std::size_t n = hypergraph.universeSize();
  if (x.size() != n) throw InvalidInput("hypergraphLemmaCheck: x must have one entry per vertex");
  for (double v : x) {
    if (!(v >= 0.0 && v <= 0.5)) throw InvalidInput("hypergraphLemmaCheck: x outside [0, 0.5]");
  }
  const std::size_t r = hypergraph.setCount() ? hypergraph.set(0).size() : 0;
  for (const auto& e : hypergraph.sets()) {
    if (e.size() != r) throw InvalidInput("hypergraphLemmaCheck: hypergraph is not uniform");
  }
  for (std::size_t d : hypergraph.elementDegrees()) {
    if (d == 0) throw InvalidInput("hypergraphLemmaCheck: vertex in no hyperedge");
  }

  const bool l2 = norm == LemmaNorm::L2;
  const auto pw = [l2](double v) { return l2 ? v * v : v; };
  double base = 0.0;
  for (double v : x) base += pw(v);

  LemmaCheck out;
  const double q = l2 ? 0.25 : 0.5;
  const double rd = static_cast<double>(r);
  const double limit = 1.0 + q * (rd - 1.0) - eps;
  out.allPremises = true;
  for (const auto& e : hypergraph.sets()) {
    double y = base;
    for (std::size_t v : e) y += pw(1.0 - x[v]) - pw(x[v]);
    out.y.push_back(y);
    const bool ok = y <= limit;
    out.premise.push_back(ok);
    out.allPremises = out.allPremises && ok;
  }
  out.bound = l2 ? std::pow(8.0 * rd / (eps * eps) + rd, rd) : std::pow(2.0 * rd / eps + rd, rd);
  out.boundHolds = static_cast<double>(hypergraph.setCount()) <= out.bound;
  out.violation = out.allPremises && !out.boundHolds;
  return out;
}

LemmaSearch lemmaSearch(std::size_t trials, std::uint64_t seed, LemmaNorm norm) {
  Rng rng(seed);
  LemmaSearch out;
  for (std::size_t t = 0; t < trials; ++t) {
    const std::size_t r = 1 + rng.below(3);
    const std::size_t n = r + rng.below(13 - r);
    const double eps = 0.05 * static_cast<double>(1 + rng.below(8));

    std::set<IndexList> edges;
    const std::size_t want = 1 + rng.below(20);
    std::vector<std::size_t> pool(n);
    for (std::size_t attempt = 0; attempt < 4 * want && edges.size() < want; ++attempt) {
      for (std::size_t i = 0; i < n; ++i) pool[i] = i;
      rng.shuffle(std::span<std::size_t>(pool));
      IndexList e(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(r));
      std::sort(e.begin(), e.end());
      edges.insert(std::move(e));
    }
    // Keep only covered vertices, relabelled in increasing order.
    std::vector<std::size_t> label(n, static_cast<std::size_t>(-1));
    std::size_t used = 0;
    for (const auto& e : edges) {
      for (std::size_t v : e) label[v] = 0;
    }
    for (auto& l : label) {
      if (l == 0) l = used++;
    }
    std::vector<IndexList> sets;
    for (const auto& e : edges) {
      IndexList s;
      for (std::size_t v : e) s.push_back(label[v]);
      sets.push_back(std::move(s));
    }
    std::vector<double> x(used);
    for (auto& v : x) {
      const auto kind = rng.below(3);
      v = kind == 0 ? 0.0 : kind == 1 ? 0.5 : rng.uniform(0.0, 0.5);
    }
    const SetSystem h(used, std::move(sets), r);
    const auto check = hypergraphLemmaCheck(h, x, eps, norm);
    ++out.trials;
    if (check.allPremises) {
      ++out.premiseSatisfying;
      out.maxEdgesSatisfying = std::max(out.maxEdgesSatisfying, h.setCount());
    }
    if (check.violation) ++out.violations;
  }
  return out;
}

std::vector<NamedConstant> gapConstants() {
  const double e = std::exp(1.0);
  return {
      {"l2-median", "1-1/e+sqrt(1.25)/e", 1.0 - 1.0 / e + std::sqrt(1.25) / e},
      {"l1-means", "1+1.25/e", 1.0 + 1.25 / e},
      {"discrete-median", "1+2/e", 1.0 + 2.0 / e},
      {"discrete-means", "1+8/e", 1.0 + 8.0 / e},
      {"one-plus-1/e", "1+1/e", 1.0 + 1.0 / e},
      {"one-plus-3/e", "1+3/e", 1.0 + 3.0 / e},
  };
}

BucketDiagnostic bucketDiagnostic(const JohnsonInstance& instance, const IndexList& cluster,
                                  const Vector& center) {
  if (center.size() != instance.n) throw DimensionMismatch("bucketDiagnostic: center dimension");
  const auto rounded = roundCenter(center).rounded;
  BucketDiagnostic out;
  out.histogram.assign(instance.n + 1, 0);
  for (std::size_t s : cluster) {
    if (s >= instance.sets.size()) throw InvalidInput("bucketDiagnostic: set index out of range");
    const auto tau = indicatorVector(instance.sets[s], instance.n);
    std::size_t d = 0;
    for (std::size_t u = 0; u < instance.n; ++u) d += tau[u] != rounded[u];
    ++out.histogram[d];
  }
  out.dominant = static_cast<std::size_t>(
      std::max_element(out.histogram.begin(), out.histogram.end()) - out.histogram.begin());
  return out;
}

}  // namespace hardclust
