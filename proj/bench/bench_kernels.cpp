#include <benchmark/benchmark.h>

#include <random>

#include "curveta/applications.hpp"
#include "curveta/kernels.hpp"

using namespace curveta;
using kernels::Exec;

namespace {

kernels::MonomialBlock random_block(std::size_t rows, std::size_t nvars, std::size_t npts, unsigned seed) {
  std::mt19937 rng(seed);
  kernels::MonomialBlock b;
  b.nvars = nvars;
  b.npts = npts;
  std::uniform_int_distribution<std::uint32_t> e(0, 6);
  std::uniform_int_distribution<std::int64_t> v(0, 200);
  for (std::size_t i = 0; i < rows * nvars; ++i) b.exps.push_back(e(rng));
  for (std::size_t i = 0; i < rows * npts; ++i) b.vals.push_back(v(rng));
  return b;
}

Exec mode(const benchmark::State& s) { return s.range(1) ? Exec::Parallel : Exec::Serial; }

void BM_PairwiseProducts(benchmark::State& state) {
  const auto rows = static_cast<std::size_t>(state.range(0));
  const auto a = random_block(rows, 6, 12, 1), b = random_block(rows, 6, 12, 2);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::pairwise_products(a, b, mode(state)));
}

void BM_MinimalMask(benchmark::State& state) {
  const auto m = random_block(static_cast<std::size_t>(state.range(0)), 6, 12, 3);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::minimal_mask(m, mode(state)));
}

void BM_MembershipMask(benchmark::State& state) {
  const auto m = random_block(static_cast<std::size_t>(state.range(0)), 6, 12, 4);
  const std::vector<std::int64_t> threshold(12, 100);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::membership_mask(m, threshold, mode(state)));
}

void BM_JumpingNumbers(benchmark::State& state) {
  auto c = make_cluster({{}, {0}, {0, 1}, {2}, {3}, {3, 4}});
  const Divisor f = Divisor::from_values(c, {6, 9, 18, 20, 21, 42});
  const MaximalContactSet set = maximal_contact_set(c);
  const mpq_class top(state.range(0), 1);
  for (auto _ : state) benchmark::DoNotOptimize(jumping_numbers(f, top, set, mode(state)));
}

}  // namespace

BENCHMARK(BM_PairwiseProducts)->ArgsProduct({{64, 256, 1024}, {0, 1}});
BENCHMARK(BM_MinimalMask)->ArgsProduct({{256, 2048, 8192}, {0, 1}});
BENCHMARK(BM_MembershipMask)->ArgsProduct({{4096, 65536}, {0, 1}});
BENCHMARK(BM_JumpingNumbers)->ArgsProduct({{1, 3}, {0, 1}});

BENCHMARK_MAIN();
