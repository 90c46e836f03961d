#include <benchmark/benchmark.h>

#include "tentlim/chains.hpp"
#include "tentlim/folding.hpp"
#include "tentlim/symmetry.hpp"

using namespace tentlim;

namespace {

KneadingMap fibonacci() { return KneadingMap::offset(2, 60); }

const TentParams& params() {
  static const TentParams p = solve_slope(kneading_sequence(fibonacci(), 2400), 60);
  return p;
}

void BM_SigmaStep(benchmark::State& state) {
  const int depth = static_cast<int>(state.range(0));
  const auto s = cutting_times_for_depth(fibonacci(), depth + 2);
  const auto fp = iterate(seed_c0(), s, depth);
  for (auto _ : state) benchmark::DoNotOptimize(sigma_step(fp, s));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(fp.size()));
}
BENCHMARK(BM_SigmaStep)->Arg(10)->Arg(15)->Arg(19);

void BM_FpC0(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fp_c0(fibonacci(), n));
}
BENCHMARK(BM_FpC0)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_BuildChain(benchmark::State& state) {
  const int depth = static_cast<int>(state.range(0));
  const auto s = cutting_times_for_depth(fibonacci(), depth + 80);
  for (auto _ : state) benchmark::DoNotOptimize(build_chain(params(), s, 8, 0.05, depth));
}
BENCHMARK(BM_BuildChain)->Arg(60)->Arg(150)->Unit(benchmark::kMillisecond);

void BM_ClassifyWindows(benchmark::State& state) {
  const auto s = cutting_times_for_depth(fibonacci(), 230);
  const auto chain = build_chain(params(), s, 8, 0.05, 150);
  const auto links = assign_links(chain.spec, params(), 150);
  const auto fp = fp_c0(fibonacci(), 10);
  for (auto _ : state) {
    std::size_t n = 0;
    for (std::size_t i = 0; i + 1 < fp.size(); ++i)
      for (std::size_t j = i + 1; j < fp.size() && j < i + 40; ++j) {
        const ArcWindow w(fp, links, i, j);
        if (is_link_symmetric(w)) n += classify_link_symmetric(w).cls == SymmetryClass::NONE;
      }
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(BM_ClassifyWindows)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
