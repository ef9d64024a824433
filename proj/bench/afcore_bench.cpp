#include <benchmark/benchmark.h>

#include <random>

#include "afcore/kernels.hpp"
#include "afcore/relations.hpp"
#include "afcore/representations.hpp"

using namespace afcore;

namespace {

IntMatrix random_matrix(std::size_t n, double density, int hi, unsigned seed) {
  std::mt19937 rng(seed);
  std::bernoulli_distribution keep(density);
  std::uniform_int_distribution<int> val(0, hi);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (keep(rng)) m(i, j) = val(rng);
  return m;
}

// A product of Toeplitz tensors, the typical shape of a relation term.
SparseMatrix toeplitz_operand(std::size_t cutoff) {
  const auto z = plucker_rep(cutoff);
  return (z.at("Z2") * z.at("Z3").adjoint()).block(0) + z.at("Z1").block(1);
}

template <IntMatrix (*F)(const IntMatrix&, const IntMatrix&)>
void BM_IntMatmul(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const IntMatrix a = random_matrix(n, 0.5, 3, 1), b = random_matrix(n, 0.5, 3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(F(a, b));
}

template <IntMatrix (*F)(const IntMatrix&)>
void BM_Reachability(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const IntMatrix adj = random_matrix(n, 2.0 / static_cast<double>(n), 1, 3);
  for (auto _ : state) benchmark::DoNotOptimize(F(adj));
}

template <SparseMatrix (*F)(const SparseMatrix&, const SparseMatrix&)>
void BM_SparseMatmul(benchmark::State& state) {
  const SparseMatrix a = toeplitz_operand(static_cast<std::size_t>(state.range(0)));
  const SparseMatrix b = a.transpose();
  for (auto _ : state) benchmark::DoNotOptimize(F(a, b));
}

void BM_PluckerRelations(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto z = plucker_rep(n);
  const auto rels = z_relations(plucker_adjacency(), 6, "Z");
  const auto inner = ToeplitzSpace(4, n).interior(InteriorSpec{3});
  for (auto _ : state) benchmark::DoNotOptimize(check_relations(z, rels, inner));
}

void BM_RankOneSweep(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(rank_one_sweep(static_cast<std::size_t>(state.range(0)), 6));
}

}  // namespace

BENCHMARK(BM_IntMatmul<kernels::serial::int_matmul>)->Name("int_matmul/serial")->Arg(64)->Arg(256);
BENCHMARK(BM_IntMatmul<kernels::parallel::int_matmul>)->Name("int_matmul/parallel")->Arg(64)->Arg(256);
BENCHMARK(BM_Reachability<kernels::serial::reachability>)->Name("reachability/serial")->Arg(128)->Arg(512);
BENCHMARK(BM_Reachability<kernels::parallel::reachability>)->Name("reachability/parallel")->Arg(128)->Arg(512);
BENCHMARK(BM_SparseMatmul<kernels::serial::sparse_matmul>)->Name("sparse_matmul/serial")->Arg(6)->Arg(10);
BENCHMARK(BM_SparseMatmul<kernels::parallel::sparse_matmul>)->Name("sparse_matmul/parallel")->Arg(6)->Arg(10);
BENCHMARK(BM_PluckerRelations)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RankOneSweep)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
