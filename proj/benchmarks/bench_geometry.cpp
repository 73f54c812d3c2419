#include <benchmark/benchmark.h>

#include "lydim/coupled_map.hpp"
#include "lydim/dimension.hpp"
#include "lydim/ifs.hpp"

using namespace lydim;

namespace {

PiecewiseExpandingMap middle_thirds_map() {
  return synthesize(TransitionMatrix::full_shift(2),
                    {Interval(0, Rational(1, 3)), Interval(Rational(2, 3), 1)},
                    {Rational(3), Rational(3)}, {false, false}, Interval(0, 1));
}

void BM_moran_root(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(moran_root({0.5, 0.25, 0.125}, 1e-12));
  }
}
BENCHMARK(BM_moran_root);

void BM_limit_set_cover(benchmark::State& state) {
  const PiecewiseExpandingMap f = middle_thirds_map();
  const auto depth = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(limit_set_cover(f, depth, 1u << 24));
  }
}
BENCHMARK(BM_limit_set_cover)->Arg(6)->Arg(9)->Arg(12);

void BM_box_count(benchmark::State& state) {
  const PiecewiseExpandingMap f = middle_thirds_map();
  const auto cover = limit_set_cover(f, static_cast<std::size_t>(state.range(0)), 1u << 24);
  std::vector<Interval> intervals;
  for (const BasicSet& b : cover) intervals.push_back(b.interval);
  Rational eps = 1;
  for (int d = 0; d < state.range(0); ++d) eps /= 3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(box_count(intervals, eps, 0));
  }
}
BENCHMARK(BM_box_count)->Arg(6)->Arg(9);

void BM_estimate_dimension(benchmark::State& state) {
  const PiecewiseExpandingMap f = middle_thirds_map();
  for (auto _ : state) {
    benchmark::DoNotOptimize(estimate_dimension(f, 4, 9));
  }
}
BENCHMARK(BM_estimate_dimension);

void BM_code_orbit(benchmark::State& state) {
  const PiecewiseExpandingMap f = middle_thirds_map();
  const Rational x = basic_set(f, SymbolWord(2, std::vector<Symbol>(40, 2))).interval.midpoint();
  for (auto _ : state) {
    benchmark::DoNotOptimize(code_orbit(f, x, 39));
  }
}
BENCHMARK(BM_code_orbit);

}  // namespace
