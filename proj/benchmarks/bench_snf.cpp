#include <benchmark/benchmark.h>

#include <random>

#include "helly/exact/linear.hpp"
#include "helly/exact/snf.hpp"

using helly::exact::IntMatrix;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t n, long bound) {
  IntMatrix m(n, n);
  std::uniform_int_distribution<long> dist(-bound, bound);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = dist(rng);
  return m;
}

void SmithNormalForm(benchmark::State& state) {
  std::mt19937_64 rng(42);
  std::vector<IntMatrix> inputs;
  for (int i = 0; i < 64; ++i)
    inputs.push_back(random_matrix(rng, static_cast<std::size_t>(state.range(0)), 20));
  std::size_t at = 0;
  for (auto _ : state) {
    auto r = helly::exact::smith_normal_form(inputs[at++ % inputs.size()]);
    benchmark::DoNotOptimize(r.s);
  }
}
BENCHMARK(SmithNormalForm)->Arg(4)->Arg(6)->Arg(8);

void IntegerSolve(benchmark::State& state) {
  std::mt19937_64 rng(7);
  IntMatrix a = random_matrix(rng, 6, 9);
  helly::exact::IntVec b(6, 3);
  for (auto _ : state) {
    auto r = helly::exact::solve_integer_linear(a, b);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(IntegerSolve);

}  // namespace
