#include <benchmark/benchmark.h>

#include "atlas/families.hpp"
#include "atlas/fusion.hpp"
#include "atlas/reptheory.hpp"

namespace {

using namespace atlas;

void class_constants(benchmark::State& state, bool parallel) {
  const PermGroup group = mathieu(11);
  const ElementIndex index(group);
  const ConjClasses classes = conjugacy_classes(group, index);
  for (auto _ : state) {
    auto a = parallel ? class_structure_constants(index, classes) : class_structure_constants_serial(index, classes);
    benchmark::DoNotOptimize(a.data());
  }
}

void bundle(benchmark::State& state, bool parallel) {
  const PermGroup group = mathieu(11);
  for (auto _ : state) {
    auto ring = hecke_ring(group, BundleOptions{parallel});
    benchmark::DoNotOptimize(ring.constants().data());
  }
}

}  // namespace

BENCHMARK_CAPTURE(class_constants, serial, false)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(class_constants, openmp, true)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bundle, serial, false)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bundle, openmp, true)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
