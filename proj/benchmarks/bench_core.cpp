#include <benchmark/benchmark.h>

#include <random>

#include "latmono/del_pezzo.hpp"
#include "latmono/discriminant.hpp"
#include "latmono/graph.hpp"
#include "latmono/k3.hpp"
#include "latmono/weyl_e7.hpp"

using namespace latmono;

static void BM_SmithRandom(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937 rng(42);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = static_cast<long>(rng() % 41) - 20;
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithRandom)->Arg(8)->Arg(14)->Arg(22);

static void BM_DiscriminantLMinus(benchmark::State& state) {
  const Lattice lm = l_minus_with_T().first;
  for (auto _ : state) benchmark::DoNotOptimize(discriminant_form(lm));
}
BENCHMARK(BM_DiscriminantLMinus);

static void BM_SchreierSimsWeyl(benchmark::State& state) {
  std::vector<Permutation> gens;
  for (const auto& r : simple_roots()) gens.push_back(class_permutation(reflection(r)));
  for (auto _ : state) benchmark::DoNotOptimize(PermGroup::from_generators(56, gens).order());
}
BENCHMARK(BM_SchreierSimsWeyl)->Unit(benchmark::kMillisecond);

static void BM_AutGosset(benchmark::State& state) {
  const Graph g = gosset_graph();
  for (auto _ : state) benchmark::DoNotOptimize(automorphism_group(g).order);
}
BENCHMARK(BM_AutGosset)->Unit(benchmark::kMillisecond);

static void BM_AutSchlafli(benchmark::State& state) {
  const Graph g = schlafli_graph();
  for (auto _ : state) benchmark::DoNotOptimize(automorphism_group(g).order);
}
BENCHMARK(BM_AutSchlafli)->Unit(benchmark::kMillisecond);

static void BM_OrthogonalGroupLPlus(benchmark::State& state) {
  const auto q = discriminant_form(l_plus());
  for (auto _ : state) benchmark::DoNotOptimize(orthogonal_group_order(q).order);
}
BENCHMARK(BM_OrthogonalGroupLPlus)->Unit(benchmark::kMillisecond);

static void BM_FirstAntiIsometry(benchmark::State& state) {
  const auto qp = discriminant_form(l_plus());
  const auto qm = discriminant_form(l_minus_with_T().first);
  for (auto _ : state) benchmark::DoNotOptimize(find_anti_isometry(qp, qm));
}
BENCHMARK(BM_FirstAntiIsometry)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
