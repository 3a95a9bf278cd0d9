#include <random>

#include <benchmark/benchmark.h>

#include "latkit/clifford.hpp"
#include "latkit/exact_linalg.hpp"
#include "latkit/named_lattices.hpp"

namespace {

using namespace latkit;

IntMatrix random_matrix(std::size_t n, long bound, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(-bound, bound);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = dist(rng);
  return m;
}

void BM_Det(benchmark::State& state) {
  const IntMatrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 100, 1);
  for (auto _ : state) benchmark::DoNotOptimize(det(m));
}
BENCHMARK(BM_Det)->Arg(8)->Arg(16)->Arg(32);

void BM_Smith(benchmark::State& state) {
  const IntMatrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 100, 2);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m, false));
}
BENCHMARK(BM_Smith)->Arg(8)->Arg(16)->Arg(24);

void BM_CliffordBuild(benchmark::State& state) {
  const Lattice l = power(hyperbolic_plane(), static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(CliffordAlgebra(l).dim());
}
BENCHMARK(BM_CliffordBuild)->Arg(1)->Arg(2)->Arg(3);

void BM_ComplementIndex(benchmark::State& state) {
  const Lattice l = power(hyperbolic_plane(), static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(complement_index(l).order);
}
BENCHMARK(BM_ComplementIndex)->Arg(1)->Arg(2);

void BM_EmbedPolarization(benchmark::State& state) {
  Int d = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(embed_polarization(d).primitive);
    d = d % 100000 + 1;
  }
}
BENCHMARK(BM_EmbedPolarization);

void BM_EmbedFullCheck(benchmark::State& state) {
  const PolarizationEmbedding e = embed_polarization(Int(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_embedding_fully(e));
}
BENCHMARK(BM_EmbedFullCheck)->Arg(7)->Arg(99991);

}  // namespace

BENCHMARK_MAIN();
