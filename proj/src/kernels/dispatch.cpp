#include <cstdlib>
#include <string_view>

#include "hardclust/kernels.hpp"

namespace hardclust::kernels {

#ifdef HARDCLUST_HAVE_AVX2
const KernelTable& avx2TableUnchecked();
#endif

std::string_view isaName(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return "scalar";
    case Isa::Avx2:
      return "avx2";
  }
  return "unknown";
}

bool cpuSupportsAvx2() {
#if defined(HARDCLUST_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const KernelTable* avx2Table() {
#ifdef HARDCLUST_HAVE_AVX2
  if (cpuSupportsAvx2()) return &avx2TableUnchecked();
#endif
  return nullptr;
}

namespace {

const KernelTable& resolve() {
  const char* env = std::getenv("HARDCLUST_ISA");
  const std::string_view request = env ? env : "";
  if (request == "scalar") return scalarTable();
  if (const KernelTable* t = avx2Table()) return *t;
  return scalarTable();
}

}  // namespace

const KernelTable& active() {
  static const KernelTable& table = resolve();
  return table;
}

}  // namespace hardclust::kernels
