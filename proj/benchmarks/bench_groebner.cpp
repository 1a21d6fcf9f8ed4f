#include <benchmark/benchmark.h>

#include "selflink/linkage.hpp"

using namespace selflink;

namespace {

Ideal triple_point(const RingPtr& ring) {
  return Ideal(ring, {Polynomial::parse(ring, "x^2"), Polynomial::parse(ring, "x*y"),
                      Polynomial::parse(ring, "y^2")});
}

} // namespace

static void BM_BuchbergerCyclic3(benchmark::State& state) {
  auto ring = PolyRing::parse("GF(101)[x,y,z]");
  std::vector<Polynomial> gens{Polynomial::parse(ring, "x + y + z"),
                               Polynomial::parse(ring, "x*y + y*z + z*x"),
                               Polynomial::parse(ring, "x*y*z - 1")};
  for (auto _ : state) {
    auto gb = buchberger(ring, gens);
    benchmark::DoNotOptimize(gb);
  }
}
BENCHMARK(BM_BuchbergerCyclic3);

static void BM_ColonTriplePoint(benchmark::State& state) {
  auto ring = PolyRing::parse("QQ[x,y,z]");
  Ideal x(ring, {Polynomial::parse(ring, "x^2"), Polynomial::parse(ring, "y^3")});
  Ideal c = triple_point(ring);
  for (auto _ : state) {
    auto q = ideal_colon(x, c);
    benchmark::DoNotOptimize(q);
  }
}
BENCHMARK(BM_ColonTriplePoint);

static void BM_VerifySelflinked(benchmark::State& state) {
  auto ring = PolyRing::parse("QQ[x,y,z]");
  Ideal c = triple_point(ring);
  auto f = Polynomial::parse(ring, "x*y");
  auto g = Polynomial::parse(ring, "x^3 - y^3");
  for (auto _ : state) {
    auto cert = verify_selflinked(c, f, g);
    benchmark::DoNotOptimize(cert);
  }
}
BENCHMARK(BM_VerifySelflinked);

static void BM_ConstructRandomRank3(benchmark::State& state) {
  auto datum = random_datum(CoefficientField::prime(101), 3, {2, 2, 2}, 2, 3, 7);
  for (auto _ : state) {
    auto res = construct(datum);
    benchmark::DoNotOptimize(res);
  }
}
BENCHMARK(BM_ConstructRandomRank3);

static void BM_HilbertDoubleline(benchmark::State& state) {
  auto ring = PolyRing::parse("QQ[x,y,z,w]");
  Ideal c = triple_point(ring);
  for (auto _ : state) {
    auto h = hilbert(c);
    benchmark::DoNotOptimize(h);
  }
}
BENCHMARK(BM_HilbertDoubleline);

BENCHMARK_MAIN();
