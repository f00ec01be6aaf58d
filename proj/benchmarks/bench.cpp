#include <benchmark/benchmark.h>

#include <random>

#include "hrap/ends.hpp"
#include "hrap/faces.hpp"
#include "hrap/polytope.hpp"
#include "hrap/symmetry.hpp"

namespace {

hrap::Vec random_vec(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-8, 8);
  std::uniform_int_distribution<int> den(1, 3);
  hrap::Vec v;
  for (int i = 0; i < 6; ++i)
    v.push_back(hrap::Exact(hrap::Rat(num(rng), den(rng)),
                            hrap::Rat(num(rng), den(rng))));
  return v;
}

void BM_ExactInner(benchmark::State& state) {
  std::mt19937 rng(1);
  const hrap::Vec x = random_vec(rng), y = random_vec(rng);
  for (auto _ : state) benchmark::DoNotOptimize(hrap::lorentz_inner(x, y));
}
BENCHMARK(BM_ExactInner);

void BM_Reflect(benchmark::State& state) {
  const hrap::PolytopeSpec p = hrap::build_polytope_P();
  std::mt19937 rng(2);
  const hrap::Vec x = random_vec(rng);
  for (auto _ : state)
    benchmark::DoNotOptimize(hrap::reflect(p.facets[20].vector, x));
}
BENCHMARK(BM_Reflect);

void BM_GramSweep(benchmark::State& state) {
  const hrap::PolytopeSpec p = hrap::build_polytope_P();
  for (auto _ : state) benchmark::DoNotOptimize(hrap::gram_matrix(p));
}
BENCHMARK(BM_GramSweep);

void BM_KernelSolve(benchmark::State& state) {
  const hrap::PolytopeSpec p = hrap::build_polytope_P();
  // A subset carrying an actual vertex: the pole ray's first five walls.
  const std::vector<hrap::Vec> rows{
      p.facets[0].vector, p.facets[2].vector, p.facets[4].vector,
      p.facets[6].vector, p.facets[7].vector};
  for (auto _ : state) benchmark::DoNotOptimize(hrap::solve_kernel(rows));
}
BENCHMARK(BM_KernelSolve);

void BM_VertexEnumeration(benchmark::State& state) {
  const hrap::PolytopeSpec p = hrap::build_polytope_P();
  for (auto _ : state)
    benchmark::DoNotOptimize(
        hrap::enumerate_vertices(p, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_VertexEnumeration)->Arg(1)->Arg(2)->Arg(4)
    ->Unit(benchmark::kMillisecond);

void BM_Automorphisms(benchmark::State& state) {
  const hrap::PolytopeSpec p = hrap::build_polytope_P();
  for (auto _ : state) benchmark::DoNotOptimize(hrap::automorphisms(p));
}
BENCHMARK(BM_Automorphisms)->Unit(benchmark::kMillisecond);

void BM_StrictCensus(benchmark::State& state) {
  const hrap::PolytopeSpec p = hrap::build_polytope_P();
  for (auto _ : state)
    benchmark::DoNotOptimize(
        hrap::maximal_disjoint_sets(p, hrap::DisjointMode::Strict));
}
BENCHMARK(BM_StrictCensus)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
