#include <benchmark/benchmark.h>

#include <random>

#include "measuringkit/constructions.hpp"
#include "measuringkit/families.hpp"
#include "measuringkit/generators.hpp"
#include "measuringkit/global_cats.hpp"
#include "measuringkit/qmodule.hpp"

using namespace measuringkit;

namespace {

Field field_for(int p) { return p == 0 ? Field::rationals() : Field::prime(p); }

void BM_Rank(benchmark::State& state) {
  const Field f = field_for(static_cast<int>(state.range(1)));
  const auto n = static_cast<std::size_t>(state.range(0));
  gen::Rng rng(1);
  Matrix m = gen::random_matrix(f, n, n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_Rank)->Args({16, 2})->Args({64, 2})->Args({16, 0})->Args({32, 0});

void BM_Kernel(benchmark::State& state) {
  const Field f = Field::prime(3);
  const auto n = static_cast<std::size_t>(state.range(0));
  gen::Rng rng(2);
  Matrix m = gen::random_matrix(f, n / 2, n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(kernel(m));
}
BENCHMARK(BM_Kernel)->Arg(16)->Arg(64);

void BM_ConvolutionAlgebra(benchmark::State& state) {
  const Field f = Field::prime(2);
  const auto n = static_cast<std::size_t>(state.range(0));
  const Coalgebra c = grouplike_coalgebra(f, n);
  const Algebra a = truncated_polynomial_algebra(f, n);
  for (auto _ : state) benchmark::DoNotOptimize(convolution_algebra(c, a));
}
BENCHMARK(BM_ConvolutionAlgebra)->Arg(2)->Arg(3)->Arg(4);

void BM_PFragmentEvaluation(benchmark::State& state) {
  const Field f = field_for(static_cast<int>(state.range(1)));
  const Algebra a = truncated_polynomial_algebra(f, static_cast<std::size_t>(state.range(0)));
  const Measuring ev = evaluation_measuring(a);
  for (auto _ : state) benchmark::DoNotOptimize(p_fragment(ev));
}
BENCHMARK(BM_PFragmentEvaluation)->Args({2, 2})->Args({4, 2})->Args({4, 0});

void BM_MergeFragments(benchmark::State& state) {
  const Field f = Field::prime(2);
  const Algebra a = truncated_polynomial_algebra(f, 2);
  std::vector<UniversalFragment> fragments;
  for (const auto& m : gen::all_measurings(dual_numbers_coalgebra(f), a, a)) fragments.push_back(p_fragment(m));
  for (auto _ : state) {
    UniversalFragment acc = fragments.front();
    for (std::size_t i = 1; i < fragments.size(); ++i) acc = merge_fragments(acc, fragments[i]);
    benchmark::DoNotOptimize(acc);
  }
  state.SetLabel(std::to_string(fragments.size()) + " fragments");
}
BENCHMARK(BM_MergeFragments);

void BM_QFragment(benchmark::State& state) {
  const Field f = Field::prime(2);
  const Algebra a = truncated_polynomial_algebra(f, 2);
  const Measuring der = derivation_measuring(a, Matrix(f, 2, 2, {0, 0, 0, 1}));
  // lbar(m (x) g) = m, lbar(m (x) d) = D(m) over the regular comodule.
  const ModuleMeasuring mm(der, regular_comodule(dual_numbers_coalgebra(f)), regular_module(a), regular_module(a),
                           Matrix(f, 2, 4, {1, 0, 0, 0, 0, 0, 1, 1}));
  for (auto _ : state) benchmark::DoNotOptimize(q_fragment(mm));
}
BENCHMARK(BM_QFragment);

void BM_ComodColimit(benchmark::State& state) {
  const Field f = Field::prime(2);
  const auto n = static_cast<std::size_t>(state.range(0));
  const Comodule x = regular_comodule(grouplike_coalgebra(f, n));
  ComodDiagram d;
  d.objects = {x, x, x};
  d.edges = {{0, 1, ComodMorphism::identity(x)}, {1, 2, ComodMorphism::identity(x)}};
  for (auto _ : state) benchmark::DoNotOptimize(comod_colimit(d));
}
BENCHMARK(BM_ComodColimit)->Arg(2)->Arg(4);

}  // namespace
BENCHMARK_MAIN();
