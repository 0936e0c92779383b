#include <benchmark/benchmark.h>

#include "l2b/bialg.hpp"
#include "l2b/fixtures.hpp"
#include "l2b/lie2.hpp"
#include "l2b/prelie2.hpp"
#include "l2b/random.hpp"

namespace {

using namespace l2b;

StrictPreLie2Algebra sized(std::int64_t n) {
  Rng rng(static_cast<std::uint64_t>(n) + 17);
  return random_prelie2(rng, static_cast<std::size_t>(n), static_cast<std::size_t>(n));
}

void BM_VerifyPrelie2(benchmark::State& state) {
  const StrictPreLie2Algebra a = sized(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_prelie2(a));
}
BENCHMARK(BM_VerifyPrelie2)->DenseRange(1, 3);

void BM_CanonicalSolution(benchmark::State& state) {
  const StrictPreLie2Algebra a = sized(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_solution(a));
}
BENCHMARK(BM_CanonicalSolution)->DenseRange(1, 3);

// The check on the doubled algebra is the costly part of the CYBE pipeline.
void BM_CybeCheck(benchmark::State& state) {
  const CybeSolution s = canonical_solution(sized(state.range(0)));
  const Tau tau{Mat(s.algebra.n1(), s.algebra.n1())};
  for (auto _ : state) benchmark::DoNotOptimize(cybe_check(s.algebra, s.R, tau));
}
BENCHMARK(BM_CybeCheck)->DenseRange(1, 3);

void BM_CeDifferential(benchmark::State& state) {
  const StrictPreLie2Algebra a = sized(state.range(0));
  const StrictLie2Algebra g = commutator_lie2(a);
  const Rep2 ad = adjoint_rep(g);
  Rng rng(5);
  Cochain c;
  c.n0 = g.n0();
  c.n1 = g.n1();
  c.m0 = ad.m0();
  c.m1 = ad.m1();
  for (int p = 0; p <= 2; ++p)
    for (int q = 0; q <= 2; ++q)
      for (int s = 0; s <= 1; ++s)
        if (Cochain::degree(p, q, s) == 3)
          for (auto& x : c.at(p, q, s)) x = rng.range(-2, 2);
  for (auto _ : state) benchmark::DoNotOptimize(ce_differential(g, ad, c));
}
BENCHMARK(BM_CeDifferential)->DenseRange(1, 3);

}  // namespace

BENCHMARK_MAIN();
