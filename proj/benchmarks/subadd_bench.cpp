// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include "subadd/construction_c3.hpp"
#include "subadd/constructions.hpp"
#include "subadd/exponent_grid.hpp"
#include "subadd/matrix.hpp"
#include "subadd/span_limit.hpp"
#include "subadd/tensor_families.hpp"

using namespace subadd;

namespace {

void BM_FlatteningRankMamu(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const RationalTensor t = mamu(n, n, n);
  for (auto _ : state) benchmark::DoNotOptimize(border_rank_lower_bound(t));
}
BENCHMARK(BM_FlatteningRankMamu)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_LimitSpanC2(benchmark::State& state) {
  const auto a = static_cast<std::size_t>(state.range(0));
  const Summands s = build_summands(C2Spec{a});
  const Shape shape = family_shape(s);
  SpanFamily f{shape.volume(), {}};
  for (const auto& z : build_c2_family(a)) f.vectors.push_back(expand_rank_one(z, shape));
  for (auto _ : state) benchmark::DoNotOptimize(limit_span(f));
}
BENCHMARK(BM_LimitSpanC2)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_VerifyC1(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_construction(C1Spec{n, n, 2}));
}
BENCHMARK(BM_VerifyC1)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_VerifyC2(benchmark::State& state) {
  const auto a = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_construction(C2Spec{a}));
}
BENCHMARK(BM_VerifyC2)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_C3Expansion(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  const auto n = static_cast<std::size_t>(state.range(1));
  const C3Decomposition dec = build_c3_decomposition(d, n);
  for (auto _ : state) benchmark::DoNotOptimize(check_c3_expansion(dec));
}
BENCHMARK(BM_C3Expansion)->Args({3, 2})->Args({3, 4})->Args({4, 2})->Args({5, 2})->Unit(benchmark::kMillisecond);

void BM_DomeGrid(benchmark::State& state) {
  const GridSpec spec = figure_defaults(GridFamily::kDome);
  const auto jobs = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(generate_grid(spec, jobs));
}
BENCHMARK(BM_DomeGrid)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace
BENCHMARK_MAIN();
