#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace hardclust {

enum class MetricTag { LInf, L1, L2, L2Squared, Hamming };

std::string_view metricName(MetricTag m);
/// Parses "linf", "l1", "l2", "l2sq", "hamming". Throws InvalidInput.
MetricTag parseMetric(std::string_view s);

using Vector = std::vector<double>;

/// Distance between two vectors of equal length. Throws DimensionMismatch.
double distance(std::span<const double> p, std::span<const double> q, MetricTag metric);

/// A finite list of points in R^dim, stored row-major, with a metric tag.
class PointSet {
 public:
  PointSet() = default;
  PointSet(std::size_t dim, MetricTag metric);
  PointSet(std::size_t dim, MetricTag metric, std::vector<Vector> const& points);

  void add(std::span<const double> p);

  std::size_t size() const { return dim_ == 0 ? 0 : coords_.size() / dim_; }
  std::size_t dim() const { return dim_; }
  MetricTag metric() const { return metric_; }
  void setMetric(MetricTag m);

  std::span<const double> operator[](std::size_t i) const {
    return {coords_.data() + i * dim_, dim_};
  }
  const double* data() const { return coords_.data(); }

  /// Subset of points in index order (same dim and metric).
  PointSet select(std::span<const std::size_t> indices) const;

  double distance(std::size_t i, std::size_t j) const;
  double distanceTo(std::size_t i, std::span<const double> q) const;

  /// Full n x n distance matrix (row-major), computed with the active kernels.
  std::vector<double> distanceMatrix() const;

  std::vector<Vector> toVectors() const;

 private:
  void checkHamming(std::span<const double> p) const;

  std::size_t dim_ = 0;
  MetricTag metric_ = MetricTag::L2;
  std::vector<double> coords_;
};

/// Symmetric distance matrix with zero diagonal.
class FiniteMetric {
 public:
  FiniteMetric() = default;
  /// Validates shape, symmetry, zero diagonal and nonnegativity. If twoValued
  /// is set every off-diagonal entry must be 1 or 2. The triangle inequality
  /// is checked separately by satisfiesTriangleInequality().
  FiniteMetric(std::size_t n, std::vector<double> dist, bool twoValued = false);

  std::size_t size() const { return n_; }
  bool twoValued() const { return twoValued_; }
  double operator()(std::size_t i, std::size_t j) const { return dist_[i * n_ + j]; }
  const std::vector<double>& matrix() const { return dist_; }

  /// Checks all triples; returns false on the first violation beyond tol.
  bool satisfiesTriangleInequality(double tol = 1e-12) const;

 private:
  std::size_t n_ = 0;
  std::vector<double> dist_;
  bool twoValued_ = false;
};

/// Point i maps to (d(i,0), ..., d(i,n-1)) in L-infinity. This is an exact
/// isometry for any finite metric.
PointSet frechetEmbed(const FiniteMetric& metric);

/// Partition assignment with optional explicit centers.
struct Clustering {
  std::size_t k = 0;
  std::vector<std::size_t> assignment;
  std::optional<std::vector<Vector>> centers;

  /// Throws InvalidInput if an index is >= k or centers are malformed.
  void validate(std::size_t pointCount, std::optional<std::size_t> dim = std::nullopt) const;

  /// Member indices of each cluster, in increasing order.
  std::vector<std::vector<std::size_t>> clusters() const;

  /// Bitmask encoding per cluster (requires assignment.size() <= 64).
  std::vector<unsigned long long> masks() const;
};

}  // namespace hardclust
