#include <benchmark/benchmark.h>

#include <random>

#include "lydim/coding.hpp"
#include "lydim/transition_matrix.hpp"
#include "lydim/witness.hpp"

using namespace lydim;

namespace {

SymbolStream random_stream(int m, std::size_t horizon, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> pick(1, m);
  std::vector<Symbol> symbols(horizon);
  for (auto& v : symbols) v = pick(rng);
  return SymbolStream(m, std::move(symbols));
}

void BM_enumerate_words(benchmark::State& state) {
  const TransitionMatrix star = TransitionMatrix::star(3);
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_admissible_words(star, n, 1u << 24));
  }
}
BENCHMARK(BM_enumerate_words)->Arg(8)->Arg(12)->Arg(16);

void BM_count_words(benchmark::State& state) {
  const TransitionMatrix star = TransitionMatrix::star(3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_admissible_words(star, 64));
  }
}
BENCHMARK(BM_count_words);

void BM_phi_round_trip(benchmark::State& state) {
  const TransitionMatrix star = TransitionMatrix::star(3);
  const SymbolStream alpha = random_stream(3, static_cast<std::size_t>(state.range(0)), 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(phi(phi_inverse(alpha), star));
  }
}
BENCHMARK(BM_phi_round_trip)->Arg(1000)->Arg(10000);

void BM_build_witness(benchmark::State& state) {
  const TransitionMatrix star = TransitionMatrix::star(3);
  const WitnessSchedule sched = WitnessSchedule::closed_form("n^2");
  const std::size_t horizon = static_cast<std::size_t>(state.range(0));
  const SymbolStream s = SymbolStream::constant(3, 1, horizon + 2);
  const SymbolStream payload = SymbolStream::constant(3, 1, horizon);
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_witness(s, sched, star, payload, horizon));
  }
}
BENCHMARK(BM_build_witness)->Arg(1000)->Arg(10000);

void BM_delta_k(benchmark::State& state) {
  const WitnessSchedule sched = WitnessSchedule::closed_form("n^2");
  const SymbolWord alpha(2, std::vector<Symbol>(2001, 2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(delta_k(alpha, sched));
  }
}
BENCHMARK(BM_delta_k);

}  // namespace
