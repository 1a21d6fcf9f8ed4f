#include <benchmark/benchmark.h>

#include <random>

#include "selflink/matrix.hpp"

using namespace selflink;

namespace {

PolyMatrix random_symmetric(const RingPtr& ring, std::size_t n, unsigned deg,
                            std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dc(-4, 4);
  auto form = [&] {
    std::vector<Term> terms;
    // dense form of total degree deg in 3 variables
    for (unsigned a = 0; a <= deg; ++a)
      for (unsigned b = 0; a + b <= deg; ++b) {
        Monomial m(ring->nvars());
        m[0] = a;
        m[1] = b;
        m[2] = deg - a - b;
        terms.push_back({m, Coeff(dc(rng))});
      }
    return Polynomial::from_terms(ring, std::move(terms));
  };
  PolyMatrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      auto e = form();
      m.set(i, j, e);
      m.set(j, i, e);
    }
  return m;
}

} // namespace

static void BM_DetCofactor(benchmark::State& state) {
  auto ring = PolyRing::parse("QQ[x,y,z]");
  auto m = random_symmetric(ring, static_cast<std::size_t>(state.range(0)), 1, 99);
  for (auto _ : state) {
    auto d = det(m);
    benchmark::DoNotOptimize(d);
  }
}
BENCHMARK(BM_DetCofactor)->Arg(3)->Arg(4)->Arg(5);

static void BM_DetBareiss(benchmark::State& state) {
  auto ring = PolyRing::parse("QQ[x,y,z]");
  auto m = random_symmetric(ring, static_cast<std::size_t>(state.range(0)), 1, 99);
  for (auto _ : state) {
    auto d = det_bareiss(m);
    benchmark::DoNotOptimize(d);
  }
}
BENCHMARK(BM_DetBareiss)->Arg(3)->Arg(4)->Arg(5);

static void BM_Adjugate(benchmark::State& state) {
  auto ring = PolyRing::parse("QQ[x,y,z]");
  auto m = random_symmetric(ring, 3, 1, 7);
  for (auto _ : state) {
    auto a = adjugate(m);
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_Adjugate);
