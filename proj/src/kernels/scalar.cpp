#include <cmath>

#include "hardclust/kernels.hpp"

namespace hardclust::kernels {
namespace {

double linfScalar(const double* a, const double* b, std::size_t dim) {
  double best = 0.0;
  for (std::size_t j = 0; j < dim; ++j) {
    const double d = std::fabs(a[j] - b[j]);
    if (d > best) best = d;
  }
  return best;
}

double l1Scalar(const double* a, const double* b, std::size_t dim) {
  double sum = 0.0;
  for (std::size_t j = 0; j < dim; ++j) sum += std::fabs(a[j] - b[j]);
  return sum;
}

double l2sqScalar(const double* a, const double* b, std::size_t dim) {
  double sum = 0.0;
  for (std::size_t j = 0; j < dim; ++j) {
    const double d = a[j] - b[j];
    sum += d * d;
  }
  return sum;
}

double hammingScalar(const double* a, const double* b, std::size_t dim) {
  std::size_t count = 0;
  for (std::size_t j = 0; j < dim; ++j) count += (a[j] != b[j]);
  return static_cast<double>(count);
}

template <PairKernel K>
void many(const double* q, const double* rows, std::size_t count, std::size_t dim, double* out) {
  for (std::size_t i = 0; i < count; ++i) out[i] = K(q, rows + i * dim, dim);
}

}  // namespace

const KernelTable& scalarTable() {
  static const KernelTable table{Isa::Scalar,         linfScalar,          l1Scalar,
                                 l2sqScalar,          hammingScalar,       many<linfScalar>,
                                 many<l1Scalar>,      many<l2sqScalar>,    many<hammingScalar>};
  return table;
}

}  // namespace hardclust::kernels
