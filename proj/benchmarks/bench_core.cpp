#include <benchmark/benchmark.h>

#include "gradus/betti.hpp"
#include "gradus/groebner.hpp"
#include "gradus/experiments.hpp"
#include "gradus/hilbert.hpp"
#include "gradus/hom.hpp"
#include "gradus/points.hpp"

namespace {

using namespace gradus;

const FieldSpec F = FieldSpec::default_field();

void BM_VanishingIdeal(benchmark::State& state) {
  const PointSet X = random_general_points(static_cast<std::size_t>(state.range(0)), 2, 1, F);
  for (auto _ : state) benchmark::DoNotOptimize(vanishing_ideal(X));
}
BENCHMARK(BM_VanishingIdeal)->Arg(7)->Arg(15)->Arg(25)->Unit(benchmark::kMillisecond);

void BM_VanishingIdealOracle(benchmark::State& state) {
  const PointSet X = random_general_points(static_cast<std::size_t>(state.range(0)), 2, 1, F);
  for (auto _ : state) benchmark::DoNotOptimize(vanishing_ideal_oracle(X));
}
BENCHMARK(BM_VanishingIdealOracle)->Arg(4)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_ReducedGroebner(benchmark::State& state) {
  const PointSet X = random_general_points(static_cast<std::size_t>(state.range(0)), 2, 1, F);
  const Ideal ix = vanishing_ideal(X);
  std::vector<Polynomial> gens = ix.generators();
  const Ideal j = example_J(X.ring(), ExampleJ::kJX6);
  gens.insert(gens.end(), j.generators().begin(), j.generators().end());
  for (auto _ : state) benchmark::DoNotOptimize(reduced_groebner(gens));
}
BENCHMARK(BM_ReducedGroebner)->Arg(7)->Arg(15)->Unit(benchmark::kMillisecond);

void BM_RowReduce(benchmark::State& state) {
  const PointSet X = random_general_points(static_cast<std::size_t>(state.range(0)), 2, 1, F);
  const unsigned d = interpolation_degree(X) + 1;
  const Matrix m = evaluation_matrix(X, d);
  for (auto _ : state) benchmark::DoNotOptimize(row_reduce(m));
}
BENCHMARK(BM_RowReduce)->Arg(15)->Arg(36)->Unit(benchmark::kMicrosecond);

void BM_GradedBetti(benchmark::State& state) {
  const PointSet X = random_general_points(static_cast<std::size_t>(state.range(0)), 2, 1, F);
  const Ideal ix = vanishing_ideal(X);
  for (auto _ : state) benchmark::DoNotOptimize(graded_betti(ix));
}
BENCHMARK(BM_GradedBetti)->Arg(7)->Arg(15)->Unit(benchmark::kMillisecond);

void BM_HilbertData(benchmark::State& state) {
  const PointSet X = random_general_points(static_cast<std::size_t>(state.range(0)), 2, 1, F);
  const Ideal ix = vanishing_ideal(X);
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_data(ix, 12));
}
BENCHMARK(BM_HilbertData)->Arg(15)->Unit(benchmark::kMillisecond);

void BM_HomDims(benchmark::State& state) {
  const PointSet X = random_general_points(7, 2, 1, F);
  const Ideal j = example_J(X.ring(), ExampleJ::kJX6);
  for (auto _ : state) benchmark::DoNotOptimize(hom_graded_dims(j, X, DegreeRange{0, 6}));
}
BENCHMARK(BM_HomDims)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
