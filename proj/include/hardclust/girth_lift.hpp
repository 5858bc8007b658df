#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "hardclust/rng.hpp"
#include "hardclust/set_system.hpp"

namespace hardclust {

struct LiftParams {
  /// Cloud size: vertex v becomes (v, 0..B-1).
  std::size_t B = 1;
  /// Each hyperedge gets l = a*B copies.
  std::size_t a = 1;
  /// Required girth of the lifted incidence graph (even, >= 4).
  std::size_t t = 6;
  std::uint64_t seed = 0;
  std::size_t girthCap = 20;
  std::size_t maxVertices = 1'000'000;
  std::size_t maxHyperedges = 1'000'000;
};

struct LiftReport {
  /// Universe: lifted vertices, (v, j) has index v*B + j. One set per
  /// surviving lifted hyperedge.
  SetSystem lifted;
  /// Original hyperedge index of each surviving lifted hyperedge.
  IndexList origin;
  std::size_t preDeletionHyperedges = 0;
  std::size_t deletedHyperedges = 0;
  /// Lifted degree range before deletion.
  std::size_t minDegreeBefore = 0;
  std::size_t maxDegreeBefore = 0;
  std::size_t maxDegree = 0;
  std::optional<std::size_t> girth;
  bool girthAchieved = false;
  double expectedCycleBound = 0.0;
  /// 4 n (4 a d r)^t.
  double deletionBound = 0.0;
};

/// l-tuple over [B] in which each value appears exactly l/B times, uniform
/// among such tuples. Throws InvalidInput unless B divides l.
std::vector<std::size_t> balancedTuple(std::size_t B, std::size_t l, Rng& rng);

/// Lifts an r-uniform hypergraph (sets are hyperedges) and deletes one
/// hyperedge per incidence cycle shorter than t. Roots are scanned in order;
/// from each root a bounded breadth-first search finds a short cycle, its
/// highest-index hyperedge is deleted, and the root is searched again until
/// clean. Deletions never create cycles, so one pass suffices.
/// Throws InvalidInput for non-uniform input or bad params, CapExceeded
/// above the size caps.
LiftReport lift(const SetSystem& hypergraph, const LiftParams& params);

/// n (4 a d r)^t; +inf on overflow.
double expectedCycleBound(double n, double d, double r, double t, double a, double B);

/// S x [B] in lifted vertex indices, increasing.
IndexList liftSolution(const IndexList& S, std::size_t B);

struct TransferRow {
  std::uint64_t seed = 0;
  double alpha = 1.0;
  std::size_t originalBudget = 0;
  std::size_t liftedBudget = 0;
  double originalFraction = 0.0;
  double liftedFraction = 0.0;
  /// The exact search would exceed the cap; fractions are not meaningful.
  bool skipped = false;
  std::size_t deleted = 0;
  bool girthAchieved = false;
};

struct TransferReport {
  std::vector<TransferRow> rows;
  double maxAbsDifference = 0.0;
};

/// For each seed params.seed + i (i < trials) and each alpha: the best
/// fraction of hyperedges hit by round(alpha k) vertices of the original
/// versus round(alpha k B) vertices of the lift, both by exact search.
TransferReport coverageTransferExperiment(const SetSystem& hypergraph, const LiftParams& params,
                                          std::size_t k, std::size_t trials,
                                          const std::vector<double>& alphas = {1.0},
                                          double searchCap = 5e6);

/// Fraction of hyperedges containing at least one chosen vertex.
double hitFraction(const SetSystem& hypergraph, const IndexList& vertices);

}  // namespace hardclust
