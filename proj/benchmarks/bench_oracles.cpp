#include <benchmark/benchmark.h>

#include "ftoracle/dso.hpp"
#include "ftoracle/fdo.hpp"
#include "ftoracle/generators.hpp"
#include "ftoracle/greedy.hpp"
#include "ftoracle/hdph.hpp"
#include "ftoracle/shortest_paths.hpp"

using namespace fto;

namespace {

Graph sample(std::int64_t n) {
  return random_strongly_connected(static_cast<std::size_t>(n), static_cast<std::size_t>(4 * n), 1);
}

void BM_Apsp(benchmark::State& state) {
  const Graph g = sample(state.range(0));
  for (auto _ : state) {
    ApspData a(g);
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_Apsp)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

void BM_HdphBuild(benchmark::State& state) {
  const Graph g = sample(state.range(0));
  const ApspData a(g);
  const ReferenceDso dso(g, a);
  HdphOptions options;
  options.window = PathWindow::kTight;
  for (auto _ : state) benchmark::DoNotOptimize(hdph(a, dso, options));
}
BENCHMARK(BM_HdphBuild)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_FdoBuild(benchmark::State& state) {
  const Graph g = sample(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_fdo_derandomized(g, Rational(1, 2)));
}
BENCHMARK(BM_FdoBuild)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_FdoQuery(benchmark::State& state) {
  const Graph g = sample(64);
  const FdoOracle o = build_fdo_derandomized(g, Rational(1, 2));
  EdgeId e = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(o.query(e));
    e = (e + 1) % static_cast<EdgeId>(g.num_edges());
  }
}
BENCHMARK(BM_FdoQuery);

void BM_FullDsoBuild(benchmark::State& state) {
  const Graph g = random_strongly_connected(static_cast<std::size_t>(state.range(0)),
                                            static_cast<std::size_t>(3 * state.range(0)), 1, 3);
  for (auto _ : state) {
    FullDso dso(g, Rational(1, 1));
    benchmark::DoNotOptimize(dso.levels());
  }
}
BENCHMARK(BM_FullDsoBuild)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_Greedy(benchmark::State& state) {
  const auto L = static_cast<std::size_t>(state.range(0));
  Rng rng(5);
  std::vector<std::vector<Vertex>> paths(500);
  for (auto& p : paths) {
    std::vector<Vertex> all(256);
    for (std::size_t v = 0; v < all.size(); ++v) all[v] = static_cast<Vertex>(v);
    rng.shuffle(all);
    p.assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(L + rng.below(L)));
  }
  for (auto _ : state) benchmark::DoNotOptimize(greedy_pivot_selection(paths, L));
}
BENCHMARK(BM_Greedy)->Arg(4)->Arg(16);

}  // namespace
BENCHMARK_MAIN();
