// Serial reference kernels against their parallel counterparts.
#include <benchmark/benchmark.h>

#include "qalg/freeness.hpp"
#include "qalg/unitfactory.hpp"

using namespace qalg;

namespace {

void BM_ThreeSquaresTableSerial(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(three_squares_table_serial(state.range(0)));
  }
}

void BM_ThreeSquaresTable(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(three_squares_table(state.range(0)));
  }
}

void BM_EnumerateSerial(benchmark::State& state) {
  RingSpec ring = make_ring(-7);
  EnumPattern pat = EnumPattern::gauss_shape(6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        enumerate_units_serial(ring, pat, -1, state.range(0)));
  }
}

void BM_Enumerate(benchmark::State& state) {
  RingSpec ring = make_ring(-7);
  EnumPattern pat = EnumPattern::gauss_shape(6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_units(ring, pat, -1, state.range(0)));
  }
}

void BM_NoRelationSerial(benchmark::State& state) {
  RingSpec ring = make_ring(-7);
  FundUnit fu = fundamental_unit(make_ring(7));
  Quaternion x = pell2_unit(ring, fu, 0, 1).u;
  Quaternion y = pell2_unit(ring, fu, 0, 2).u;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        no_relation_up_to_serial(x, y, static_cast<int>(state.range(0))));
  }
}

void BM_NoRelation(benchmark::State& state) {
  RingSpec ring = make_ring(-7);
  FundUnit fu = fundamental_unit(make_ring(7));
  Quaternion x = pell2_unit(ring, fu, 0, 1).u;
  Quaternion y = pell2_unit(ring, fu, 0, 2).u;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        no_relation_up_to(x, y, static_cast<int>(state.range(0))));
  }
}

}  // namespace

BENCHMARK(BM_ThreeSquaresTableSerial)->Arg(100000)->Arg(1000000);
BENCHMARK(BM_ThreeSquaresTable)->Arg(100000)->Arg(1000000);
BENCHMARK(BM_EnumerateSerial)->Arg(15)->Arg(25);
BENCHMARK(BM_Enumerate)->Arg(15)->Arg(25);
BENCHMARK(BM_NoRelationSerial)->Arg(6)->Arg(8);
BENCHMARK(BM_NoRelation)->Arg(6)->Arg(8);

BENCHMARK_MAIN();
