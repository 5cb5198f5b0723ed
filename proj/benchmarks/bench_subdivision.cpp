#include <benchmark/benchmark.h>

#include "ellone/simplicial/affine_chains.hpp"
#include "ellone/simplicial/subdivision.hpp"
#include "ellone/standard_complexes.hpp"

namespace {

using ellone::simplicial::SubdividedComplex;

void BM_SubdivideSimplexRounds(benchmark::State& state) {
  const auto k = ellone::standard::simplex(2);
  const int rounds = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto report = ellone::simplicial::iterate_subdivision(k, rounds);
    benchmark::DoNotOptimize(report);
  }
  state.counters["top_simplices"] = static_cast<double>(ellone::simplicial::predicted_top_counts(k, rounds)[2]);
}
BENCHMARK(BM_SubdivideSimplexRounds)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

// 20 x 25 grid torus: 1000 triangles.
void BM_SubdivideTorusOnce(benchmark::State& state) {
  const auto k = ellone::standard::grid_torus(20, 25);
  for (auto _ : state) {
    auto sd = SubdividedComplex::build(k);
    benchmark::DoNotOptimize(sd);
  }
  state.counters["triangles"] = static_cast<double>(k.count(2));
}
BENCHMARK(BM_SubdivideTorusOnce)->Unit(benchmark::kMillisecond);

void BM_AffineSubdivisionPower(benchmark::State& state) {
  const auto k = ellone::standard::simplex(2);
  const int power = static_cast<int>(state.range(0));
  for (auto _ : state) {
    ellone::simplicial::AffineChainModel model(k);
    ellone::simplicial::AffineChain c(2);
    c.add(model.embed(k.simplex(2, 0)), 1);
    benchmark::DoNotOptimize(model.sd_power(c, power));
  }
}
BENCHMARK(BM_AffineSubdivisionPower)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
