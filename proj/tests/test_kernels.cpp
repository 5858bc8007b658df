#include <cmath>
#include <vector>

#include "doctest.h"
#include "hardclust/kernels.hpp"
#include "hardclust/rng.hpp"
#include "oracles.hpp"

using namespace hardclust;

namespace {

std::vector<double> randomVector(Rng& rng, std::size_t n, bool binary) {
  std::vector<double> v(n);
  for (auto& x : v) x = binary ? static_cast<double>(rng.below(2)) : rng.uniform(-5.0, 5.0);
  return v;
}

bool close(double a, double b) { return std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(b)); }

}  // namespace

TEST_CASE("scalar kernels match plain loops") {
  const auto& s = kernels::scalarTable();
  Rng rng(7);
  for (std::size_t n = 0; n < 40; ++n) {
    const auto a = randomVector(rng, n, false);
    const auto b = randomVector(rng, n, false);
    CHECK(s.linf(a.data(), b.data(), n) == oracle::linf(a, b));
    CHECK(close(s.l1(a.data(), b.data(), n), oracle::l1(a, b)));
    CHECK(close(s.l2sq(a.data(), b.data(), n), oracle::l2sq(a, b)));
    const auto x = randomVector(rng, n, true);
    const auto y = randomVector(rng, n, true);
    CHECK(s.hamming(x.data(), y.data(), n) == oracle::l1(x, y));
  }
}

TEST_CASE("avx2 kernels agree with scalar") {
  const kernels::KernelTable* v = kernels::avx2Table();
  if (!v) {
    MESSAGE("AVX2 unavailable on this CPU; skipping");
    return;
  }
  const auto& s = kernels::scalarTable();
  Rng rng(11);
  // Lengths around every vector-width boundary, including the empty case.
  for (std::size_t n = 0; n < 70; ++n) {
    for (int rep = 0; rep < 5; ++rep) {
      const auto a = randomVector(rng, n, false);
      const auto b = randomVector(rng, n, false);
      CHECK(v->linf(a.data(), b.data(), n) == s.linf(a.data(), b.data(), n));
      CHECK(close(v->l1(a.data(), b.data(), n), s.l1(a.data(), b.data(), n)));
      CHECK(close(v->l2sq(a.data(), b.data(), n), s.l2sq(a.data(), b.data(), n)));
      const auto x = randomVector(rng, n, true);
      const auto y = randomVector(rng, n, true);
      CHECK(v->hamming(x.data(), y.data(), n) == s.hamming(x.data(), y.data(), n));
    }
  }
}

TEST_CASE("many kernels equal repeated pair kernels") {
  Rng rng(3);
  std::vector<const kernels::KernelTable*> tables{&kernels::scalarTable()};
  if (auto* v = kernels::avx2Table()) tables.push_back(v);
  for (const auto* t : tables) {
    for (std::size_t dim : {1u, 3u, 4u, 7u, 9u, 16u, 33u}) {
      const std::size_t count = 13;
      auto rows = randomVector(rng, dim * count, false);
      auto bins = randomVector(rng, dim * count, true);
      const auto q = randomVector(rng, dim, false);
      const auto qb = randomVector(rng, dim, true);
      std::vector<double> out(count);
      t->linfMany(q.data(), rows.data(), count, dim, out.data());
      for (std::size_t i = 0; i < count; ++i) CHECK(out[i] == t->linf(q.data(), rows.data() + i * dim, dim));
      t->l1Many(q.data(), rows.data(), count, dim, out.data());
      for (std::size_t i = 0; i < count; ++i) CHECK(close(out[i], t->l1(q.data(), rows.data() + i * dim, dim)));
      t->l2sqMany(q.data(), rows.data(), count, dim, out.data());
      for (std::size_t i = 0; i < count; ++i) CHECK(close(out[i], t->l2sq(q.data(), rows.data() + i * dim, dim)));
      t->hammingMany(qb.data(), bins.data(), count, dim, out.data());
      for (std::size_t i = 0; i < count; ++i) CHECK(out[i] == t->hamming(qb.data(), bins.data() + i * dim, dim));
    }
  }
}

TEST_CASE("half-integer gadget coordinates are exact in every variant") {
  std::vector<const kernels::KernelTable*> tables{&kernels::scalarTable()};
  if (auto* v = kernels::avx2Table()) tables.push_back(v);
  const std::vector<double> a{2, -2, 0, 0, 2, 0, -2, 0, 0};
  const std::vector<double> b{-2, 0, 2, 0, 0, 0, 0, -2, 2};
  for (const auto* t : tables) {
    CHECK(t->linf(a.data(), b.data(), a.size()) == 4.0);
    CHECK(t->l1(a.data(), b.data(), a.size()) == 16.0);
    CHECK(t->l2sq(a.data(), b.data(), a.size()) == 40.0);
  }
}

TEST_CASE("active table is one of the compiled ones") {
  const auto& a = kernels::active();
  CHECK((a.isa == kernels::Isa::Scalar || a.isa == kernels::Isa::Avx2));
  CHECK(kernels::isaName(a.isa).size() > 0);
}
