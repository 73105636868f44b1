#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "bbd/analysis.hpp"
#include "bbd/canon.hpp"
#include "bbd/cycles.hpp"
#include "bbd/hunt.hpp"

namespace {

std::vector<bbd::BipartiteDigraph> random_corpus(int a, double density, int n) {
  bbd::GenSpec spec;
  spec.half_order = a;
  spec.arc_density = density;
  spec.seed = 1234;
  std::vector<bbd::BipartiteDigraph> out;
  for (int i = 0; i < n; ++i) out.push_back(bbd::gen_random(spec, i));
  return out;
}

void BM_PreHamiltonianSearch(benchmark::State& state) {
  const int a = static_cast<int>(state.range(0));
  auto corpus = random_corpus(a, 0.4, 64);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& d = corpus[i++ % corpus.size()];
    benchmark::DoNotOptimize(bbd::has_cycle_of_length(d, 2 * a - 2));
  }
}
BENCHMARK(BM_PreHamiltonianSearch)->DenseRange(4, 10, 2);

void BM_CycleSpectrum(benchmark::State& state) {
  const int a = static_cast<int>(state.range(0));
  auto corpus = random_corpus(a, 0.5, 64);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(bbd::cycle_spectrum(corpus[i++ % corpus.size()]));
}
BENCHMARK(BM_CycleSpectrum)->DenseRange(4, 8, 1);

void BM_D10Spectrum(benchmark::State& state) {
  auto d = bbd::build_d10();
  for (auto _ : state) benchmark::DoNotOptimize(bbd::cycle_spectrum(d));
}
BENCHMARK(BM_D10Spectrum);

void BM_BruteOracle(benchmark::State& state) {
  const int a = static_cast<int>(state.range(0));
  auto corpus = random_corpus(a, 0.5, 64);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(bbd::brute_oracle_has_cycle(corpus[i++ % corpus.size()], 2 * a));
}
BENCHMARK(BM_BruteOracle)->DenseRange(2, 5, 1);

void BM_CanonicalForm(benchmark::State& state) {
  const int a = static_cast<int>(state.range(0));
  auto corpus = random_corpus(a, 0.5, 64);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(bbd::canonical_form(corpus[i++ % corpus.size()]));
}
BENCHMARK(BM_CanonicalForm)->DenseRange(3, 9, 2);

void BM_Analyze(benchmark::State& state) {
  auto corpus = random_corpus(static_cast<int>(state.range(0)), 0.5, 64);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(bbd::analyze(corpus[i++ % corpus.size()]));
}
BENCHMARK(BM_Analyze)->Arg(5)->Arg(16)->Arg(32);

void BM_StructuredHunt(benchmark::State& state) {
  bbd::GenSpec spec;
  spec.half_order = static_cast<int>(state.range(0));
  spec.mode = bbd::GenMode::Structured;
  spec.arc_density = 0.7;
  spec.seed = 42;
  spec.count = 500;
  for (auto _ : state) benchmark::DoNotOptimize(bbd::hunt_counterexamples(bbd::TheoremId::T16, spec, 1));
  state.SetItemsProcessed(state.iterations() * spec.count);
}
BENCHMARK(BM_StructuredHunt)->DenseRange(5, 7, 1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
