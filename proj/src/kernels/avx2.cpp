// Compiled with -mavx2 -mfma. Only reached through avx2Table() after a
// runtime CPU check.

#include <immintrin.h>

#include <bit>
#include <cmath>

#include "hardclust/kernels.hpp"

namespace hardclust::kernels {

namespace {

inline __m256d absPd(__m256d v) {
  return _mm256_andnot_pd(_mm256_set1_pd(-0.0), v);
}

inline double hmax(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_max_pd(lo, hi);
  hi = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_max_sd(lo, hi));
}

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  hi = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, hi));
}

double linfAvx2(const double* a, const double* b, std::size_t dim) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t j = 0;
  for (; j + 4 <= dim; j += 4) {
    const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a + j), _mm256_loadu_pd(b + j));
    acc = _mm256_max_pd(acc, absPd(d));
  }
  double best = hmax(acc);
  for (; j < dim; ++j) {
    const double d = std::fabs(a[j] - b[j]);
    if (d > best) best = d;
  }
  return best;
}

double l1Avx2(const double* a, const double* b, std::size_t dim) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t j = 0;
  for (; j + 4 <= dim; j += 4) {
    const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a + j), _mm256_loadu_pd(b + j));
    acc = _mm256_add_pd(acc, absPd(d));
  }
  double sum = hsum(acc);
  for (; j < dim; ++j) sum += std::fabs(a[j] - b[j]);
  return sum;
}

double l2sqAvx2(const double* a, const double* b, std::size_t dim) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t j = 0;
  for (; j + 4 <= dim; j += 4) {
    const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a + j), _mm256_loadu_pd(b + j));
    acc = _mm256_fmadd_pd(d, d, acc);
  }
  double sum = hsum(acc);
  for (; j < dim; ++j) {
    const double d = a[j] - b[j];
    sum += d * d;
  }
  return sum;
}

double hammingAvx2(const double* a, const double* b, std::size_t dim) {
  std::size_t count = 0;
  std::size_t j = 0;
  for (; j + 4 <= dim; j += 4) {
    const __m256d ne =
        _mm256_cmp_pd(_mm256_loadu_pd(a + j), _mm256_loadu_pd(b + j), _CMP_NEQ_UQ);
    count += static_cast<std::size_t>(std::popcount(static_cast<unsigned>(_mm256_movemask_pd(ne))));
  }
  for (; j < dim; ++j) count += (a[j] != b[j]);
  return static_cast<double>(count);
}

template <PairKernel K>
void many(const double* q, const double* rows, std::size_t count, std::size_t dim, double* out) {
  for (std::size_t i = 0; i < count; ++i) out[i] = K(q, rows + i * dim, dim);
}

}  // namespace

const KernelTable& avx2TableUnchecked() {
  static const KernelTable table{Isa::Avx2,        linfAvx2,        l1Avx2,
                                 l2sqAvx2,         hammingAvx2,     many<linfAvx2>,
                                 many<l1Avx2>,     many<l2sqAvx2>,  many<hammingAvx2>};
  return table;
}

}  // namespace hardclust::kernels
