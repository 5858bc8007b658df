#include "hardclust/approx.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <string>

#include "hardclust/brute_force.hpp"
#include "hardclust/coverage.hpp"
#include "hardclust/error.hpp"
#include "hardclust/rng.hpp"

namespace hardclust {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// cost[p * M + c] = w_p * g(d(p, c)).
std::vector<double> costMatrix(const PointSet& points, const std::vector<double>* weights,
                               const PointSet& candidates, Objective objective) {
  const std::size_t n = points.size(), M = candidates.size();
  std::vector<double> out(n * M);
  for (std::size_t p = 0; p < n; ++p) {
    const double w = weights ? (*weights)[p] : 1.0;
    for (std::size_t c = 0; c < M; ++c) {
      out[p * M + c] = w * pointCost(distance(points[p], candidates[c], points.metric()), objective);
    }
  }
  return out;
}

DiscreteSolution finalize(const PointSet& points, std::vector<Vector> centers, Objective objective) {
  DiscreteSolution out;
  out.clustering.k = centers.size();
  out.clustering.assignment.assign(points.size(), 0);
  for (std::size_t p = 0; p < points.size(); ++p) {
    double best = kInf;
    for (std::size_t c = 0; c < centers.size(); ++c) {
      const double v = pointCost(points.distanceTo(p, centers[c]), objective);
      if (v < best) {
        best = v;
        out.clustering.assignment[p] = c;
      }
    }
    out.cost += best;
  }
  out.clustering.centers = centers;
  out.centers = std::move(centers);
  return out;
}

void checkObjective(Objective objective) {
  if (objective == Objective::Minsum) throw InvalidInput("objective must be median or means");
}

// Best k-subset of candidates for the weighted points; lexicographic ties.
std::vector<std::size_t> bestSubset(const PointSet& points, const std::vector<double>* weights,
                                    const PointSet& candidates, std::size_t k, Objective objective,
                                    double cap) {
  const std::size_t n = points.size(), M = candidates.size();
  if (M == 0) throw InvalidInput("no candidate centers");
  const std::size_t m = std::min(k, M);
  if (binomial(M, m) > cap) {
    throw CapExceeded("C(" + std::to_string(M) + "," + std::to_string(m) + ") exceeds cap");
  }
  const auto cost = costMatrix(points, weights, candidates, objective);
  std::vector<std::vector<double>> level(m + 1, std::vector<double>(n, kInf));
  std::vector<std::size_t> cur(m), best;
  double bestCost = kInf;
  auto rec = [&](auto&& self, std::size_t depth, std::size_t start) -> void {
    if (depth == m) {
      double total = 0.0;
      for (double v : level[m]) total += v;
      if (total < bestCost) {
        bestCost = total;
        best = cur;
      }
      return;
    }
    for (std::size_t c = start; c + (m - depth) <= M; ++c) {
      cur[depth] = c;
      for (std::size_t p = 0; p < n; ++p) {
        level[depth + 1][p] = std::min(level[depth][p], cost[p * M + c]);
      }
      self(self, depth + 1, c + 1);
    }
  };
  rec(rec, 0, 0);
  return best;
}

std::vector<Vector> gather(const PointSet& set, const std::vector<std::size_t>& idx, std::size_t k) {
  std::vector<Vector> out;
  for (std::size_t i : idx) out.emplace_back(set[i].begin(), set[i].end());
  while (out.size() < k) out.push_back(out.front());
  return out;
}

}  // namespace

DiscreteSolution twoApproxEnumerate(const PointSet& points, std::size_t k, Objective objective,
                                    double cap) {
  checkObjective(objective);
  if (points.size() == 0) throw InvalidInput("twoApproxEnumerate: empty input");
  if (k == 0) throw InvalidInput("twoApproxEnumerate: k must be positive");
  const auto idx = bestSubset(points, nullptr, points, k, objective, cap);
  return finalize(points, gather(points, idx, k), objective);
}

std::vector<Vector> ballGrid(std::span<const double> p, double R, double eta) {
  const double s = 2.0 * eta * R;
  const auto J = static_cast<long>(std::max(0.0, std::ceil(R / s - 0.5)));
  const std::size_t d = p.size();
  const std::size_t side = static_cast<std::size_t>(2 * J + 1);
  std::vector<Vector> out;
  std::vector<long> idx(d, -J);
  std::size_t total = 1;
  for (std::size_t j = 0; j < d; ++j) total *= side;
  out.reserve(total);
  for (std::size_t t = 0; t < total; ++t) {
    Vector q(d);
    for (std::size_t j = 0; j < d; ++j) {
      // Clip the outermost layer onto the ball boundary.
      q[j] = p[j] + std::clamp(static_cast<double>(idx[j]) * s, -R, R);
    }
    out.push_back(std::move(q));
    for (std::size_t j = 0; j < d; ++j) {
      if (++idx[j] <= J) break;
      idx[j] = -J;
    }
  }
  return out;
}

CandidateCenterSet candidateCenterSet(const PointSet& points, std::size_t k, double eps,
                                      Objective objective, std::size_t maxCandidates) {
  checkObjective(objective);
  if (!(eps > 0.0 && eps <= 1.0)) throw InvalidInput("candidateCenterSet: eps must lie in (0, 1]");
  const auto base = twoApproxEnumerate(points, k, objective);
  CandidateCenterSet out;
  out.epsilon = eps;
  out.gamma = base.cost;
  const double eta = objective == Objective::Median ? eps / 2.0 : (std::sqrt(1.0 + eps) - 1.0) / 2.0;
  out.spacingFactor = 2.0 * eta;

  std::vector<Vector> all = points.toVectors();
  if (out.gamma > 0.0) {
    const double g = objective == Objective::Median ? out.gamma : std::sqrt(out.gamma);
    const double lo = eps * g / static_cast<double>(points.size());
    const double hi = 2.0 * g;
    for (int i = static_cast<int>(std::ceil(std::log2(lo))); std::ldexp(1.0, i) <= hi; ++i) {
      out.radii.push_back(std::ldexp(1.0, i));
    }
    for (std::size_t p = 0; p < points.size(); ++p) {
      for (double R : out.radii) {
        auto grid = ballGrid(points[p], R, eta);
        if (all.size() + grid.size() > maxCandidates) {
          throw CapExceeded("candidateCenterSet: more than " + std::to_string(maxCandidates) +
                            " candidates");
        }
        all.insert(all.end(), std::make_move_iterator(grid.begin()),
                   std::make_move_iterator(grid.end()));
      }
    }
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  out.centers = PointSet(points.dim(), points.metric(), all);
  return out;
}

DiscreteSolution bestCandidateCenters(const PointSet& points, const std::vector<double>& weights,
                                      const PointSet& candidates, std::size_t k,
                                      Objective objective, unsigned jobs) {
  checkObjective(objective);
  const std::size_t n = points.size(), M = candidates.size();
  if (n > 20) throw CapExceeded("bestCandidateCenters: more than 20 points");
  if (weights.size() != n) throw InvalidInput("bestCandidateCenters: one weight per point");
  if (M == 0) throw InvalidInput("bestCandidateCenters: no candidates");
  if (k == 0) throw InvalidInput("bestCandidateCenters: k must be positive");
  const auto cost = costMatrix(points, &weights, candidates, objective);
  const std::size_t masks = std::size_t{1} << n;
  std::vector<double> best(masks, kInf), tmp(masks, 0.0);
  std::vector<std::size_t> arg(masks, 0);
  best[0] = 0.0;
  for (std::size_t c = 0; c < M; ++c) {
    for (std::size_t mask = 1; mask < masks; ++mask) {
      const auto low = static_cast<std::size_t>(__builtin_ctzll(mask));
      tmp[mask] = tmp[mask & (mask - 1)] + cost[low * M + c];
      if (tmp[mask] < best[mask]) {
        best[mask] = tmp[mask];
        arg[mask] = c;
      }
    }
  }
  const auto part = minimumPartition(best, n, k, jobs);
  std::vector<std::size_t> blocks(k, 0);
  for (std::size_t i = 0; i < n; ++i) blocks[part.assignment[i]] |= std::size_t{1} << i;
  std::vector<Vector> centers;
  for (std::size_t b = 0; b < k; ++b) {
    const std::size_t c = blocks[b] ? arg[blocks[b]] : 0;
    centers.emplace_back(candidates[c].begin(), candidates[c].end());
  }
  auto out = finalize(points, std::move(centers), objective);
  out.cost = weightedCost(points, weights, out.centers, objective);
  return out;
}

double weightedCost(const PointSet& points, const std::vector<double>& weights,
                    const std::vector<Vector>& centers, Objective objective) {
  if (weights.size() != points.size()) throw InvalidInput("weightedCost: one weight per point");
  double total = 0.0;
  for (std::size_t p = 0; p < points.size(); ++p) {
    double best = kInf;
    for (const auto& c : centers) best = std::min(best, pointCost(points.distanceTo(p, c), objective));
    total += weights[p] * best;
  }
  return total;
}

Coreset coresetBuild(const PointSet& points, std::size_t k, double eps, Objective objective,
                     std::uint64_t seed, std::size_t samplesPerRing) {
  checkObjective(objective);
  if (samplesPerRing == 0) throw InvalidInput("coresetBuild: samples per ring must be positive");
  const auto base = twoApproxEnumerate(points, k, objective);
  const double g = objective == Objective::Median ? base.cost : std::sqrt(base.cost);
  const double lo = eps * g / static_cast<double>(points.size());

  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> groups;
  for (std::size_t p = 0; p < points.size(); ++p) {
    const std::size_t c = base.clustering.assignment[p];
    const double d = points.distanceTo(p, base.centers[c]);
    std::size_t ring = 0;
    if (lo > 0.0) {
      double edge = lo;
      while (d > edge) {
        edge *= 2.0;
        ++ring;
      }
    }
    groups[{c, ring}].push_back(p);
  }

  Rng rng(seed);
  Coreset out;
  out.epsilon = eps;
  out.points = PointSet(points.dim(), points.metric());
  for (auto& [key, members] : groups) {
    std::vector<std::size_t> take = members;
    double w = 1.0;
    if (members.size() > samplesPerRing) {
      rng.shuffle(std::span<std::size_t>(take));
      take.resize(samplesPerRing);
      std::sort(take.begin(), take.end());
      w = static_cast<double>(members.size()) / static_cast<double>(samplesPerRing);
    }
    for (std::size_t p : take) {
      out.points.add(points[p]);
      out.weights.push_back(w);
      out.source.push_back(p);
    }
  }
  return out;
}

CoresetCheck verifyCoreset(const PointSet& points, const Coreset& coreset,
                           const PointSet& candidates, std::size_t k, double eps,
                           Objective objective, double cap) {
  checkObjective(objective);
  const std::size_t M = candidates.size();
  const std::size_t m = std::min(k, M);
  if (M == 0) throw InvalidInput("verifyCoreset: no candidates");
  if (binomial(M, m) > cap) throw CapExceeded("verifyCoreset: too many candidate subsets");
  const std::size_t n = points.size(), w = coreset.points.size();
  const auto full = costMatrix(points, nullptr, candidates, objective);
  const auto small = costMatrix(coreset.points, &coreset.weights, candidates, objective);

  std::vector<std::vector<double>> lp(m + 1, std::vector<double>(n, kInf));
  std::vector<std::vector<double>> lw(m + 1, std::vector<double>(w, kInf));
  CoresetCheck out;
  auto rec = [&](auto&& self, std::size_t depth, std::size_t start) -> void {
    if (depth == m) {
      double cp = 0.0, cw = 0.0;
      for (double v : lp[m]) cp += v;
      for (double v : lw[m]) cw += v;
      ++out.subsetsChecked;
      const double err = std::abs(cw - cp);
      const double rel = cp > 0.0 ? err / cp : (err > 0.0 ? kInf : 0.0);
      out.maxRelativeError = std::max(out.maxRelativeError, rel);
      return;
    }
    for (std::size_t c = start; c + (m - depth) <= M; ++c) {
      for (std::size_t p = 0; p < n; ++p) lp[depth + 1][p] = std::min(lp[depth][p], full[p * M + c]);
      for (std::size_t q = 0; q < w; ++q) lw[depth + 1][q] = std::min(lw[depth][q], small[q * M + c]);
      self(self, depth + 1, c + 1);
    }
  };
  rec(rec, 0, 0);
  out.holds = out.maxRelativeError <= eps * (1.0 + 1e-12);
  return out;
}

DiscreteSolution pipelineBelow2(const PointSet& points, std::size_t k, double eps,
                                Objective objective, std::uint64_t seed) {
  checkObjective(objective);
  const auto coreset = coresetBuild(points, k, eps, objective, seed);
  const auto idx = bestSubset(coreset.points, &coreset.weights, points, k, objective, 1e7);
  return finalize(points, gather(points, idx, k), objective);
}

DiscreteSolution pipelineOnePlusEps(const PointSet& points, std::size_t k, double eps,
                                    Objective objective, unsigned jobs) {
  checkObjective(objective);
  const auto cand = candidateCenterSet(points, k, eps, objective);
  const std::vector<double> ones(points.size(), 1.0);
  const auto sol = bestCandidateCenters(points, ones, cand.centers, k, objective, jobs);
  return finalize(points, sol.centers, objective);
}

}  // namespace hardclust
