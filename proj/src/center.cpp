#include "hardclust/center.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <string>

#include "hardclust/convex.hpp"
#include "hardclust/error.hpp"

namespace hardclust {

namespace {

double clusterCost(const PointSet& cluster, MetricTag metric, Objective objective,
                   std::span<const double> center) {
  double total = 0.0;
  for (std::size_t i = 0; i < cluster.size(); ++i) {
    total += pointCost(distance(cluster[i], center, metric), objective);
  }
  return total;
}

double pairBound(const PointSet& cluster, MetricTag metric, Objective objective) {
  if (metric == MetricTag::L2Squared) return 0.0;  // not a metric
  double best = 0.0;
  for (std::size_t i = 0; i < cluster.size(); ++i) {
    for (std::size_t j = i + 1; j < cluster.size(); ++j) {
      best = std::max(best, distance(cluster[i], cluster[j], metric));
    }
  }
  return objective == Objective::Means ? best * best / 2.0 : best;
}

Vector centroid(const PointSet& cluster) {
  Vector c(cluster.dim(), 0.0);
  for (std::size_t i = 0; i < cluster.size(); ++i) {
    const auto p = cluster[i];
    for (std::size_t j = 0; j < c.size(); ++j) c[j] += p[j];
  }
  for (double& x : c) x /= static_cast<double>(cluster.size());
  return c;
}

Vector coordinateMedian(const PointSet& cluster) {
  Vector c(cluster.dim());
  std::vector<double> column(cluster.size());
  for (std::size_t j = 0; j < c.size(); ++j) {
    for (std::size_t i = 0; i < cluster.size(); ++i) column[i] = cluster[i][j];
    std::sort(column.begin(), column.end());
    // Any point in the median interval is optimal; take its midpoint.
    const std::size_t n = column.size();
    c[j] = n % 2 ? column[n / 2] : 0.5 * (column[n / 2 - 1] + column[n / 2]);
  }
  return c;
}

double maxDistanceFrom(const PointSet& cluster, std::span<const double> y) {
  double r = 0.0;
  for (std::size_t i = 0; i < cluster.size(); ++i) {
    r = std::max(r, std::sqrt(distance(cluster[i], y, MetricTag::L2Squared)));
  }
  return r;
}

CenterResult geometricMedian(const PointSet& cluster, const CenterOptions& options) {
  const std::size_t d = cluster.dim();
  const std::size_t n = cluster.size();
  Vector y = centroid(cluster);
  Vector next(d), num(d), pull(d);

  double scale = maxDistanceFrom(cluster, y);
  const double coincide = 1e-14 * std::max(1.0, scale);
  bool converged = false;
  double subgradNorm = 0.0;

  for (int it = 0; it < options.maxIterations; ++it) {
    std::fill(num.begin(), num.end(), 0.0);
    std::fill(pull.begin(), pull.end(), 0.0);
    double den = 0.0;
    double eta = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const auto p = cluster[i];
      const double dist = std::sqrt(distance(p, y, MetricTag::L2Squared));
      if (dist <= coincide) {
        eta += 1.0;
        continue;
      }
      const double w = 1.0 / dist;
      den += w;
      for (std::size_t j = 0; j < d; ++j) {
        num[j] += w * p[j];
        pull[j] += w * (p[j] - y[j]);
      }
    }
    double r = 0.0;
    for (double v : pull) r += v * v;
    r = std::sqrt(r);
    subgradNorm = std::max(0.0, r - eta);
    if (den == 0.0 || r <= eta) {
      converged = true;  // y is a data point satisfying the optimality test
      break;
    }
    const double keep = eta > 0.0 ? std::min(1.0, eta / r) : 0.0;
    double step = 0.0;
    for (std::size_t j = 0; j < d; ++j) {
      next[j] = (1.0 - keep) * (num[j] / den) + keep * y[j];
      step += (next[j] - y[j]) * (next[j] - y[j]);
    }
    y.swap(next);
    if (std::sqrt(step) < options.tol * 1e-2) {
      converged = true;
      break;
    }
  }

  CenterResult out;
  out.center = y;
  out.cost = clusterCost(cluster, MetricTag::L2, Objective::Median, y);
  // Convexity: f(y) - f* <= |g| * |y - y*| and y* lies in the convex hull.
  out.gap = subgradNorm * maxDistanceFrom(cluster, y);
  out.lowerBound = std::max(pairBound(cluster, MetricTag::L2, Objective::Median), out.cost - out.gap);
  out.converged = converged && out.gap <= std::max(options.tol, 1e-9 * out.cost);
  out.method = "weiszfeld";
  return out;
}

CenterResult quarticCenter(const PointSet& cluster, const CenterOptions& options) {
  // minimize sum |c - p|^4 (squared-L2 metric, Means objective).
  const auto d = static_cast<Eigen::Index>(cluster.dim());
  Vector start = centroid(cluster);
  Eigen::VectorXd y = Eigen::Map<const Eigen::VectorXd>(start.data(), d);
  auto value = [&](const Eigen::VectorXd& c) {
    double f = 0.0;
    for (std::size_t i = 0; i < cluster.size(); ++i) {
      const double s = (c - Eigen::Map<const Eigen::VectorXd>(cluster[i].data(), d)).squaredNorm();
      f += s * s;
    }
    return f;
  };
  Eigen::VectorXd grad(d);
  bool converged = false;
  for (int it = 0; it < options.maxIterations; ++it) {
    grad.setZero();
    Eigen::MatrixXd hess = Eigen::MatrixXd::Zero(d, d);
    for (std::size_t i = 0; i < cluster.size(); ++i) {
      const Eigen::VectorXd r = y - Eigen::Map<const Eigen::VectorXd>(cluster[i].data(), d);
      const double s = r.squaredNorm();
      grad += 4.0 * s * r;
      hess += 8.0 * r * r.transpose();
      hess.diagonal().array() += 4.0 * s;
    }
    if (grad.norm() == 0.0) {
      converged = true;
      break;
    }
    hess.diagonal().array() += 1e-300;
    const Eigen::VectorXd dir = hess.ldlt().solve(-grad);
    double step = 1.0;
    const double f0 = value(y);
    while (step > 1e-12 && value(y + step * dir) > f0 + 1e-4 * step * grad.dot(dir)) step *= 0.5;
    y += step * dir;
    if (step * dir.norm() < options.tol * 1e-2) {
      converged = true;
      break;
    }
  }
  CenterResult out;
  out.center.assign(y.data(), y.data() + d);
  out.cost = clusterCost(cluster, MetricTag::L2Squared, Objective::Means, out.center);
  grad.setZero();
  for (std::size_t i = 0; i < cluster.size(); ++i) {
    const Eigen::VectorXd r = y - Eigen::Map<const Eigen::VectorXd>(cluster[i].data(), d);
    grad += 4.0 * r.squaredNorm() * r;
  }
  out.gap = grad.norm() * maxDistanceFrom(cluster, out.center);
  out.lowerBound = std::max(0.0, out.cost - out.gap);
  out.converged = converged;
  out.method = "newton-quartic";
  return out;
}

CenterResult hammingCenter(const PointSet& cluster, Objective objective,
                           const CenterOptions& options) {
  const std::size_t d = cluster.dim();
  CenterResult out;
  out.center.assign(d, 0.0);
  if (objective == Objective::Median) {
    for (std::size_t j = 0; j < d; ++j) {
      std::size_t ones = 0;
      for (std::size_t i = 0; i < cluster.size(); ++i) ones += cluster[i][j] != 0.0;
      out.center[j] = 2 * ones > cluster.size() ? 1.0 : 0.0;
    }
    out.cost = clusterCost(cluster, MetricTag::Hamming, objective, out.center);
    out.method = "majority";
  } else {
    if (d > options.hammingMeansMaxDim || d >= 63) {
      throw CapExceeded("optimalCenter: Hamming/Means dimension " + std::to_string(d) +
                        " exceeds cap " + std::to_string(options.hammingMeansMaxDim));
    }
    std::vector<std::uint64_t> bits(cluster.size(), 0);
    for (std::size_t i = 0; i < cluster.size(); ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        if (cluster[i][j] != 0.0) bits[i] |= 1ULL << j;
      }
    }
    std::uint64_t bestMask = 0;
    double best = std::numeric_limits<double>::infinity();
    for (std::uint64_t c = 0; c < (1ULL << d); ++c) {
      double total = 0.0;
      for (std::uint64_t b : bits) {
        const double h = std::popcount(b ^ c);
        total += h * h;
      }
      if (total < best) {
        best = total;
        bestMask = c;
      }
    }
    for (std::size_t j = 0; j < d; ++j) out.center[j] = (bestMask >> j) & 1ULL ? 1.0 : 0.0;
    out.cost = best;
    out.method = "binary-enumeration";
  }
  out.lowerBound = out.cost;
  return out;
}

CenterResult l1MeansCenter(const PointSet& cluster, const CenterOptions& options) {
  const auto n = static_cast<Eigen::Index>(cluster.size());
  const auto d = static_cast<Eigen::Index>(cluster.dim());
  // Variables: c (d), then u_{p,j} (n*d) with |p_j - c_j| <= u_{p,j}.
  const Eigen::Index vars = d + n * d;
  convex::Problem prob;
  prob.shape = convex::Problem::Shape::Squared;
  prob.W = Eigen::MatrixXd::Zero(n, vars);
  prob.A = Eigen::MatrixXd::Zero(2 * n * d, vars);
  prob.b = Eigen::VectorXd::Zero(2 * n * d);
  Eigen::Index row = 0;
  for (Eigen::Index p = 0; p < n; ++p) {
    for (Eigen::Index j = 0; j < d; ++j) {
      const Eigen::Index u = d + p * d + j;
      const double pj = cluster[static_cast<std::size_t>(p)][static_cast<std::size_t>(j)];
      prob.W(p, u) = 1.0;
      prob.A(row, j) = -1.0;
      prob.A(row, u) = -1.0;
      prob.b(row++) = -pj;
      prob.A(row, j) = 1.0;
      prob.A(row, u) = -1.0;
      prob.b(row++) = pj;
    }
  }
  const Vector med = coordinateMedian(cluster);
  Eigen::VectorXd x0(vars);
  for (Eigen::Index j = 0; j < d; ++j) x0[j] = med[static_cast<std::size_t>(j)];
  for (Eigen::Index p = 0; p < n; ++p) {
    for (Eigen::Index j = 0; j < d; ++j) {
      x0[d + p * d + j] =
          std::abs(cluster[static_cast<std::size_t>(p)][static_cast<std::size_t>(j)] - x0[j]) + 1.0;
    }
  }
  convex::Options opts;
  opts.tol = options.tol;
  const auto res = convex::minimize(prob, x0, opts);

  CenterResult out;
  out.center.assign(res.x.data(), res.x.data() + d);
  out.cost = clusterCost(cluster, MetricTag::L1, Objective::Means, out.center);
  out.gap = res.gapBound;
  out.lowerBound = pairBound(cluster, MetricTag::L1, Objective::Means);
  out.converged = res.converged;
  out.method = "barrier-epigraph";
  return out;
}

Vector centerWithinRadii(const PointSet& cluster, std::span<const double> radii) {
  Vector c(cluster.dim());
  for (std::size_t j = 0; j < c.size(); ++j) {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < cluster.size(); ++i) {
      lo = std::max(lo, cluster[i][j] - radii[i]);
      hi = std::min(hi, cluster[i][j] + radii[i]);
    }
    c[j] = 0.5 * (lo + hi);
  }
  return c;
}

}  // namespace

LinfRadii linfRadii(std::span<const double> dist, std::size_t n, Objective objective,
                    const CenterOptions& options) {
  if (dist.size() != n * n) throw InvalidInput("linfRadii: distance matrix must be n x n");
  LinfRadii out;
  if (n == 0) return out;
  out.radii.assign(n, 0.0);
  if (n == 1) return out;

  const auto nn = static_cast<Eigen::Index>(n);
  const Eigen::Index pairs = nn * (nn - 1) / 2;
  convex::Problem prob;
  prob.shape = objective == Objective::Means ? convex::Problem::Shape::Squared
                                             : convex::Problem::Shape::Linear;
  prob.W = Eigen::MatrixXd::Identity(nn, nn);
  prob.A = Eigen::MatrixXd::Zero(pairs + nn, nn);
  prob.b = Eigen::VectorXd::Zero(pairs + nn);
  double maxD = 0.0;
  Eigen::Index row = 0;
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) {
      const double d = dist[p * n + q];
      maxD = std::max(maxD, d);
      prob.A(row, static_cast<Eigen::Index>(p)) = -1.0;
      prob.A(row, static_cast<Eigen::Index>(q)) = -1.0;
      prob.b(row++) = -d;
    }
  }
  for (Eigen::Index p = 0; p < nn; ++p) prob.A(row++, p) = -1.0;

  const Eigen::VectorXd x0 = Eigen::VectorXd::Constant(nn, maxD > 0.0 ? 0.75 * maxD : 1.0);
  convex::Options opts;
  opts.tol = options.tol;
  opts.maxNewtonSteps = options.maxIterations;
  const auto res = convex::minimize(prob, x0, opts);
  for (std::size_t p = 0; p < n; ++p) out.radii[p] = std::max(0.0, res.x[static_cast<Eigen::Index>(p)]);
  out.cost = res.objective;
  out.gap = res.gapBound;
  out.converged = res.converged;
  return out;
}

CenterResult linfCenterDirect(const PointSet& cluster, Objective objective,
                              const CenterOptions& options) {
  if (cluster.size() == 0) throw InvalidInput("linfCenterDirect: empty cluster");
  const auto n = static_cast<Eigen::Index>(cluster.size());
  const auto d = static_cast<Eigen::Index>(cluster.dim());
  convex::Problem prob;
  prob.shape = objective == Objective::Means ? convex::Problem::Shape::Squared
                                             : convex::Problem::Shape::Linear;
  prob.W = Eigen::MatrixXd::Zero(n, d + n);
  prob.W.rightCols(n) = Eigen::MatrixXd::Identity(n, n);
  prob.A = Eigen::MatrixXd::Zero(2 * n * d, d + n);
  prob.b = Eigen::VectorXd::Zero(2 * n * d);
  Eigen::Index row = 0;
  for (Eigen::Index p = 0; p < n; ++p) {
    for (Eigen::Index j = 0; j < d; ++j) {
      const double pj = cluster[static_cast<std::size_t>(p)][static_cast<std::size_t>(j)];
      prob.A(row, j) = -1.0;
      prob.A(row, d + p) = -1.0;
      prob.b(row++) = -pj;
      prob.A(row, j) = 1.0;
      prob.A(row, d + p) = -1.0;
      prob.b(row++) = pj;
    }
  }
  Eigen::VectorXd x0(d + n);
  Vector start(cluster.dim());
  for (std::size_t j = 0; j < cluster.dim(); ++j) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (std::size_t i = 0; i < cluster.size(); ++i) {
      lo = std::min(lo, cluster[i][j]);
      hi = std::max(hi, cluster[i][j]);
    }
    start[j] = 0.5 * (lo + hi);
    x0[static_cast<Eigen::Index>(j)] = start[j];
  }
  for (Eigen::Index p = 0; p < n; ++p) {
    x0[d + p] = distance(cluster[static_cast<std::size_t>(p)], start, MetricTag::LInf) + 1.0;
  }
  convex::Options opts;
  opts.tol = options.tol;
  opts.maxNewtonSteps = options.maxIterations;
  const auto res = convex::minimize(prob, x0, opts);

  CenterResult out;
  out.center.assign(res.x.data(), res.x.data() + d);
  out.cost = clusterCost(cluster, MetricTag::LInf, objective, out.center);
  out.gap = res.gapBound;
  out.lowerBound = pairBound(cluster, MetricTag::LInf, objective);
  out.converged = res.converged;
  out.method = "barrier-epigraph";
  return out;
}

CenterResult optimalCenter(const PointSet& cluster, MetricTag metric, Objective objective,
                           const CenterOptions& options) {
  if (cluster.size() == 0) throw InvalidInput("optimalCenter: empty cluster");
  if (objective == Objective::Minsum) {
    throw InvalidInput("optimalCenter: the minsum objective has no centers");
  }
  if (cluster.size() == 1) {
    const auto p = cluster[0];
    return CenterResult{Vector(p.begin(), p.end()), 0.0, 0.0, 0.0, true, "singleton"};
  }

  CenterResult out;
  switch (metric) {
    case MetricTag::LInf: {
      PointSet view = cluster;
      view.setMetric(MetricTag::LInf);
      const auto radii = linfRadii(view.distanceMatrix(), view.size(), objective, options);
      out.center = centerWithinRadii(view, radii.radii);
      out.cost = clusterCost(view, MetricTag::LInf, objective, out.center);
      out.gap = radii.gap;
      out.lowerBound = pairBound(view, MetricTag::LInf, objective);
      out.converged = radii.converged;
      out.method = "barrier-radii";
      return out;
    }
    case MetricTag::L1:
      if (objective == Objective::Means) return l1MeansCenter(cluster, options);
      out.center = coordinateMedian(cluster);
      out.method = "coordinate-median";
      break;
    case MetricTag::L2:
      if (objective == Objective::Median) return geometricMedian(cluster, options);
      out.center = centroid(cluster);
      out.method = "centroid";
      break;
    case MetricTag::L2Squared:
      if (objective == Objective::Means) return quarticCenter(cluster, options);
      out.center = centroid(cluster);
      out.method = "centroid";
      break;
    case MetricTag::Hamming:
      return hammingCenter(cluster, objective, options);
  }
  out.cost = clusterCost(cluster, metric, objective, out.center);
  out.lowerBound = out.cost;
  return out;
}

}  // namespace hardclust
