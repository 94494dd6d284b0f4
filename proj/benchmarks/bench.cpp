#include <benchmark/benchmark.h>

#include "scrollreg/hypercohomology.hpp"
#include "scrollreg/oracle.hpp"
#include "scrollreg/regularity.hpp"
#include "scrollreg/splitting.hpp"

using namespace scrollreg;

namespace {

void BM_LineCohom(benchmark::State& state) {
  Scroll x = make_scroll(2, 3, {1, 1, 1, 1});
  const std::int64_t r = state.range(0);
  for (auto _ : state)
    for (std::int64_t p = -r; p <= r; ++p)
      for (std::int64_t q = -r; q <= r; ++q) benchmark::DoNotOptimize(line_cohom(x, {p, q}));
}
BENCHMARK(BM_LineCohom)->Arg(4)->Arg(8);

void BM_CharacterCohom(benchmark::State& state) {
  Scroll x = make_scroll(2, 3, {1, 1, 1, 1});
  const std::int64_t r = state.range(0);
  for (auto _ : state)
    for (std::int64_t p = -r; p <= r; ++p)
      for (std::int64_t q = -r; q <= r; ++q) benchmark::DoNotOptimize(character_cohom(x, {p, q}));
}
BENCHMARK(BM_CharacterCohom)->Arg(4)->Arg(8);

void BM_OmegaHypercohom(benchmark::State& state) {
  Scroll x = make_scroll(1, static_cast<int>(state.range(0)), std::vector<std::int64_t>(state.range(0) + 1, 1));
  MonomialComplex c = build_omega_resolution(x, 1).twisted({-1, 2});
  for (auto _ : state) benchmark::DoNotOptimize(hypercohom(c));
}
BENCHMARK(BM_OmegaHypercohom)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_Reg(benchmark::State& state) {
  Scroll x = make_scroll(2, 2, {1, 1, 1});
  SheafSpec e = SplitBundle{{0, 0}, {0, 1}, {1, -1}};
  for (auto _ : state) benchmark::DoNotOptimize(reg(x, e));
}
BENCHMARK(BM_Reg);

void BM_SplitOfh(benchmark::State& state) {
  Scroll x = make_scroll(1, 2, {1, 1, 2});
  SheafSpec e = SplitBundle{{0, 0}, {0, 1}, {1, -1}};
  for (auto _ : state) benchmark::DoNotOptimize(check_thm_splittingOfh(x, e));
}
BENCHMARK(BM_SplitOfh);

}  // namespace

BENCHMARK_MAIN();
