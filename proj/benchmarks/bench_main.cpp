#include <benchmark/benchmark.h>

#include <random>

#include "burau_lab/braid_word.hpp"
#include "burau_lab/burau.hpp"
#include "burau_lab/moduli.hpp"
#include "burau_lab/monodromy.hpp"

using namespace burau_lab;

static void BM_LaurentWord(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(1);
  const BraidWord w = random_word(n, static_cast<std::size_t>(state.range(1)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(burau_of_word(w));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(w.size()));
}
BENCHMARK(BM_LaurentWord)->Args({4, 50})->Args({4, 200})->Args({8, 200});

static void BM_SpecializedWord(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SpecializedBurau beta(n, minus_q_from_d(static_cast<int>(state.range(1))));
  std::mt19937_64 rng(2);
  const BraidWord w = random_word(n, 500, rng);
  for (auto _ : state) benchmark::DoNotOptimize(beta(w));
  state.SetItemsProcessed(state.iterations() * 500);
}
BENCHMARK(BM_SpecializedWord)->Args({4, 5})->Args({4, 18})->Args({10, 3});

static void BM_NormalClosureMembership(benchmark::State& state) {
  const auto gens = kernel_descriptor(4, 12).descriptor->normal_generators();
  const SpecializedBurau beta(4, minus_q_from_d(12));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    const BraidWord w = sample_normal_closure(4, gens, 3, 20, seed++);
    benchmark::DoNotOptimize(beta.in_kernel(w));
  }
}
BENCHMARK(BM_NormalClosureMembership);

static void BM_DiagramCheck(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const CyclotomicNumber x = minus_q_from_d(5);
  std::mt19937_64 rng(3);
  const BraidWord w = random_word(n, 20, rng);
  for (auto _ : state) benchmark::DoNotOptimize(diagram_check(w, n + 2, x));
}
BENCHMARK(BM_DiagramCheck)->Arg(4)->Arg(6);

static void BM_InvariantForm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto gens = rho_generators(n, n + 1, minus_q_from_d(4));
  for (auto _ : state) benchmark::DoNotOptimize(invariant_hermitian_form(gens));
}
BENCHMARK(BM_InvariantForm)->Arg(4)->Arg(7);

static void BM_KernelTable(benchmark::State& state) {
  for (auto _ : state)
    for (const auto& row : published_kernel_table()) benchmark::DoNotOptimize(kernel_descriptor(row.n, row.d));
}
BENCHMARK(BM_KernelTable);
BENCHMARK_MAIN();
