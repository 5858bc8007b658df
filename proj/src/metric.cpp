#include "hardclust/metric.hpp"

#include <cmath>
#include <string>

#include "hardclust/error.hpp"
#include "hardclust/kernels.hpp"

namespace hardclust {

std::string_view metricName(MetricTag m) {
  switch (m) {
    case MetricTag::LInf:
      return "linf";
    case MetricTag::L1:
      return "l1";
    case MetricTag::L2:
      return "l2";
    case MetricTag::L2Squared:
      return "l2sq";
    case MetricTag::Hamming:
      return "hamming";
  }
  return "unknown";
}

MetricTag parseMetric(std::string_view s) {
  if (s == "linf") return MetricTag::LInf;
  if (s == "l1") return MetricTag::L1;
  if (s == "l2") return MetricTag::L2;
  if (s == "l2sq") return MetricTag::L2Squared;
  if (s == "hamming") return MetricTag::Hamming;
  throw InvalidInput("unknown metric '" + std::string(s) + "'");
}

namespace {

double kernelDistance(const double* a, const double* b, std::size_t dim, MetricTag metric) {
  const auto& k = kernels::active();
  switch (metric) {
    case MetricTag::LInf:
      return k.linf(a, b, dim);
    case MetricTag::L1:
      return k.l1(a, b, dim);
    case MetricTag::L2:
      return std::sqrt(k.l2sq(a, b, dim));
    case MetricTag::L2Squared:
      return k.l2sq(a, b, dim);
    case MetricTag::Hamming:
      return k.hamming(a, b, dim);
  }
  return 0.0;
}

}  // namespace

double distance(std::span<const double> p, std::span<const double> q, MetricTag metric) {
  if (p.size() != q.size()) {
    throw DimensionMismatch("distance: dimensions " + std::to_string(p.size()) + " and " +
                            std::to_string(q.size()));
  }
  return kernelDistance(p.data(), q.data(), p.size(), metric);
}

PointSet::PointSet(std::size_t dim, MetricTag metric) : dim_(dim), metric_(metric) {
  if (dim == 0) throw InvalidInput("PointSet: dim must be positive");
}

PointSet::PointSet(std::size_t dim, MetricTag metric, std::vector<Vector> const& points)
    : PointSet(dim, metric) {
  coords_.reserve(points.size() * dim);
  for (const auto& p : points) add(p);
}

void PointSet::checkHamming(std::span<const double> p) const {
  for (double x : p) {
    if (x != 0.0 && x != 1.0) throw InvalidInput("PointSet: Hamming coordinates must be 0 or 1");
  }
}

void PointSet::add(std::span<const double> p) {
  if (p.size() != dim_) {
    throw DimensionMismatch("PointSet::add: expected dim " + std::to_string(dim_) + ", got " +
                            std::to_string(p.size()));
  }
  if (metric_ == MetricTag::Hamming) checkHamming(p);
  coords_.insert(coords_.end(), p.begin(), p.end());
}

void PointSet::setMetric(MetricTag m) {
  if (m == MetricTag::Hamming) {
    for (std::size_t i = 0; i < size(); ++i) checkHamming((*this)[i]);
  }
  metric_ = m;
}

PointSet PointSet::select(std::span<const std::size_t> indices) const {
  PointSet out(dim_, metric_);
  out.coords_.reserve(indices.size() * dim_);
  for (std::size_t i : indices) {
    if (i >= size()) throw InvalidInput("PointSet::select: index out of range");
    const auto p = (*this)[i];
    out.coords_.insert(out.coords_.end(), p.begin(), p.end());
  }
  return out;
}

double PointSet::distance(std::size_t i, std::size_t j) const {
  return kernelDistance(coords_.data() + i * dim_, coords_.data() + j * dim_, dim_, metric_);
}

double PointSet::distanceTo(std::size_t i, std::span<const double> q) const {
  if (q.size() != dim_) throw DimensionMismatch("PointSet::distanceTo: dimension mismatch");
  return kernelDistance(coords_.data() + i * dim_, q.data(), dim_, metric_);
}

std::vector<double> PointSet::distanceMatrix() const {
  const std::size_t n = size();
  std::vector<double> out(n * n, 0.0);
  const auto& k = kernels::active();
  kernels::ManyKernel many = nullptr;
  switch (metric_) {
    case MetricTag::LInf:
      many = k.linfMany;
      break;
    case MetricTag::L1:
      many = k.l1Many;
      break;
    case MetricTag::L2:
    case MetricTag::L2Squared:
      many = k.l2sqMany;
      break;
    case MetricTag::Hamming:
      many = k.hammingMany;
      break;
  }
  for (std::size_t i = 0; i < n; ++i) {
    many(coords_.data() + i * dim_, coords_.data(), n, dim_, out.data() + i * n);
  }
  if (metric_ == MetricTag::L2) {
    for (double& v : out) v = std::sqrt(v);
  }
  // Force exact symmetry; the reassociating kernels may differ in the last ulp.
  for (std::size_t i = 0; i < n; ++i) {
    out[i * n + i] = 0.0;
    for (std::size_t j = i + 1; j < n; ++j) out[j * n + i] = out[i * n + j];
  }
  return out;
}

std::vector<Vector> PointSet::toVectors() const {
  std::vector<Vector> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) {
    const auto p = (*this)[i];
    out.emplace_back(p.begin(), p.end());
  }
  return out;
}

FiniteMetric::FiniteMetric(std::size_t n, std::vector<double> dist, bool twoValued)
    : n_(n), dist_(std::move(dist)), twoValued_(twoValued) {
  if (dist_.size() != n * n) throw InvalidInput("FiniteMetric: matrix must be n x n");
  for (std::size_t i = 0; i < n; ++i) {
    if (dist_[i * n + i] != 0.0) throw InvalidInput("FiniteMetric: nonzero diagonal");
    for (std::size_t j = 0; j < n; ++j) {
      const double d = dist_[i * n + j];
      if (!(d >= 0.0) || !std::isfinite(d)) {
        throw InvalidInput("FiniteMetric: entries must be finite and nonnegative");
      }
      if (d != dist_[j * n + i]) throw InvalidInput("FiniteMetric: matrix is not symmetric");
      if (twoValued && i != j && d != 1.0 && d != 2.0) {
        throw InvalidInput("FiniteMetric: two-valued metric has an entry outside {1,2}");
      }
    }
  }
}

bool FiniteMetric::satisfiesTriangleInequality(double tol) const {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      const double dij = (*this)(i, j);
      for (std::size_t l = 0; l < n_; ++l) {
        if (dij > (*this)(i, l) + (*this)(l, j) + tol) return false;
      }
    }
  }
  return true;
}

PointSet frechetEmbed(const FiniteMetric& metric) {
  const std::size_t n = metric.size();
  if (n == 0) return PointSet{};
  PointSet out(n, MetricTag::LInf);
  std::vector<double> row(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) row[j] = metric(i, j);
    out.add(row);
  }
  return out;
}

void Clustering::validate(std::size_t pointCount, std::optional<std::size_t> dim) const {
  if (k == 0) throw InvalidInput("Clustering: k must be positive");
  if (assignment.size() != pointCount) {
    throw InvalidInput("Clustering: assignment has " + std::to_string(assignment.size()) +
                       " entries for " + std::to_string(pointCount) + " points");
  }
  for (std::size_t a : assignment) {
    if (a >= k) throw InvalidInput("Clustering: cluster index out of range");
  }
  if (centers) {
    if (centers->size() != k) throw InvalidInput("Clustering: expected k centers");
    if (dim) {
      for (const auto& c : *centers) {
        if (c.size() != *dim) throw DimensionMismatch("Clustering: center dimension mismatch");
      }
    }
  }
}

std::vector<std::vector<std::size_t>> Clustering::clusters() const {
  std::vector<std::vector<std::size_t>> out(k);
  for (std::size_t i = 0; i < assignment.size(); ++i) out.at(assignment[i]).push_back(i);
  return out;
}

std::vector<unsigned long long> Clustering::masks() const {
  if (assignment.size() > 64) throw InvalidInput("Clustering::masks: more than 64 points");
  std::vector<unsigned long long> out(k, 0);
  for (std::size_t i = 0; i < assignment.size(); ++i) out.at(assignment[i]) |= 1ULL << i;
  return out;
}

}  // namespace hardclust
