#pragma once

// Distance kernels over contiguous double vectors.
//
// Every kernel has a scalar reference implementation. On x86-64 an AVX2
// variant is compiled into a separate translation unit and selected at
// runtime when the CPU reports AVX2 and FMA. The environment variable
// HARDCLUST_ISA=scalar|avx2 overrides the choice (an unavailable ISA falls
// back to scalar).
//
// The L-infinity and Hamming kernels are bit-exact across variants (max and
// compare are exact). The L1 and squared-L2 kernels reassociate the sum and
// may differ from the scalar result in the last few ulps.

#include <cstddef>
#include <span>
#include <string_view>

namespace hardclust::kernels {

enum class Isa { Scalar, Avx2 };

std::string_view isaName(Isa isa);

using PairKernel = double (*)(const double* a, const double* b, std::size_t dim);

/// One-to-many kernel: out[i] = dist(query, rows + i*dim) for i < count.
using ManyKernel = void (*)(const double* query, const double* rows, std::size_t count,
                            std::size_t dim, double* out);

struct KernelTable {
  Isa isa;
  PairKernel linf;
  PairKernel l1;
  PairKernel l2sq;
  PairKernel hamming;
  ManyKernel linfMany;
  ManyKernel l1Many;
  ManyKernel l2sqMany;
  ManyKernel hammingMany;
};

const KernelTable& scalarTable();

/// AVX2 table, or nullptr when not compiled in or not supported by this CPU.
const KernelTable* avx2Table();

/// The table selected for this process (resolved once, thread-safe).
const KernelTable& active();

bool cpuSupportsAvx2();

}  // namespace hardclust::kernels
