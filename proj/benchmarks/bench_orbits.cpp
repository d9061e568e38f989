#include <benchmark/benchmark.h>

#include <random>

#include "helly/rank2/oracle.hpp"
#include "helly/torus/weight_system.hpp"

namespace {

void TorusSelect(benchmark::State& state) {
  auto w = helly::torus::hard_instance(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(helly::torus::select_factors(w));
}
BENCHMARK(TorusSelect)->Arg(2)->Arg(3);

helly::rank2::FactoredForm quadratic(long a) {
  using helly::rank2::form_of;
  return form_of(1, {{{1, 0}, 1}, {{a, 1}, 1}});
}

void Gl2ClosedStructured(benchmark::State& state) {
  std::vector<helly::rank2::Gl2Component> comps = {
      helly::rank2::Gl2Component::make(helly::rank2::form_of(1, {}), 1),
      helly::rank2::Gl2Component::make(helly::rank2::form_of(1, {}), -1),
      helly::rank2::Gl2Component::make(quadratic(0), 1),
      helly::rank2::Gl2Component::make(quadratic(1), 1),
      helly::rank2::Gl2Component::make(quadratic(-1), 1)};
  for (auto _ : state)
    benchmark::DoNotOptimize(helly::rank2::gl2_orbit_closed(comps));
}
BENCHMARK(Gl2ClosedStructured);

void Gl2ClosedOracle(benchmark::State& state) {
  std::vector<helly::rank2::Gl2Component> comps = {
      helly::rank2::Gl2Component::make(helly::rank2::form_of(1, {}), 1),
      helly::rank2::Gl2Component::make(helly::rank2::form_of(1, {}), -1),
      helly::rank2::Gl2Component::make(quadratic(0), 1),
      helly::rank2::Gl2Component::make(quadratic(1), 1),
      helly::rank2::Gl2Component::make(quadratic(-1), 1)};
  for (auto _ : state)
    benchmark::DoNotOptimize(helly::rank2::oracle_gl2_closed(comps));
}
BENCHMARK(Gl2ClosedOracle);

}  // namespace
