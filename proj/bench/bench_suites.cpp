#include <benchmark/benchmark.h>

#include "geocrystal/expr.hpp"
#include "geocrystal/geom.hpp"
#include "geocrystal/pcrystal.hpp"
#include "geocrystal/udiso.hpp"

using namespace geocrystal;

namespace {

Execution mode(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::serial : Execution::parallel;
}

void label(benchmark::State& state) { state.SetLabel(state.range(0) == 0 ? "serial" : "parallel"); }

void BM_GeomAxioms(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_axioms(4, 20, 7, mode(state)));
  label(state);
}

void BM_ClosedForms(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_closed_forms(6, 50, 7, mode(state)));
  label(state);
}

void BM_Iso(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_iso(3, Region::box(3), mode(state)));
  label(state);
}

void BM_Mechanical(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_ud_mechanical(4, Region::sampled(2000, 1), mode(state)));
  label(state);
}

void BM_CrystalAxioms(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_crystal_axioms(4, 2, mode(state)));
  label(state);
}

void BM_BoxCompare(benchmark::State& state) {
  const auto lhs = tropicalize(catalog(3).action(0, 2));
  std::vector<BoxAxis> box;
  for (const char* v : {"c", "x2", "x3", "x4", "x5"}) box.push_back({v, -6, 6});
  for (auto _ : state)
    benchmark::DoNotOptimize(trop_equal_on_box(lhs, lhs, box, kDefaultBoxCap, mode(state)));
  label(state);
}

}  // namespace

BENCHMARK(BM_GeomAxioms)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClosedForms)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Iso)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Mechanical)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CrystalAxioms)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BoxCompare)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
