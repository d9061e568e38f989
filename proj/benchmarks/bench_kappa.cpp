#include <benchmark/benchmark.h>

#include "helly/abelian/group.hpp"
#include "helly/actions/table_group.hpp"

namespace {

void BruteKappaElementary16(benchmark::State& state) {
  helly::abelian::FiniteAbelianGroup g(helly::exact::IntVec{2, 2, 2, 2});
  for (auto _ : state)
    benchmark::DoNotOptimize(helly::abelian::brute_kappa(g));
}
BENCHMARK(BruteKappaElementary16);

void BruteKappaCyclic200(benchmark::State& state) {
  helly::abelian::FiniteAbelianGroup g(helly::exact::IntVec{200});
  for (auto _ : state)
    benchmark::DoNotOptimize(helly::abelian::brute_kappa(g));
}
BENCHMARK(BruteKappaCyclic200);

void BruteKappaS4(benchmark::State& state) {
  helly::actions::FiniteGroupTable g = helly::actions::symmetric_group(4);
  for (auto _ : state)
    benchmark::DoNotOptimize(helly::actions::brute_kappa_table(g));
}
BENCHMARK(BruteKappaS4);

}  // namespace
