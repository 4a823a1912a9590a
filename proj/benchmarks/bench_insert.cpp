#include <benchmark/benchmark.h>

#include <vector>

#include "hh/minimum.hpp"
#include "hh/misra_gries.hpp"
#include "hh/optimal_hh.hpp"
#include "hh/simple_hh.hpp"
#include "hh/voting.hpp"
#include "hh/workload.hpp"

namespace {

constexpr std::uint64_t kN = 10000;
constexpr std::uint64_t kM = 1 << 22;

const std::vector<std::uint64_t>& stream() {
  static const auto s = hh::zipf_stream(kN, 1.1, kM, 1);
  return s;
}

hh::SketchConfig config(double eps) {
  hh::SketchConfig cfg;
  cfg.epsilon = eps;
  cfg.phi = 0.2;
  cfg.delta = 0.1;
  cfg.universe = kN;
  cfg.stream_length = kM;
  cfg.seed = 7;
  return cfg;
}

// Runs the sketch over the precomputed stream, rebuilding it after each pass.
template <class Make>
void run(benchmark::State& state, Make make) {
  const auto& s = stream();
  auto sk = make();
  std::size_t i = 0;
  for (auto _ : state) {
    sk.insert(s[i]);
    if (++i == s.size()) {
      state.PauseTiming();
      sk = make();
      i = 0;
      state.ResumeTiming();
    }
  }
  state.SetItemsProcessed(state.iterations());
}

void BM_CounterTable(benchmark::State& state) {
  run(state, [&] { return hh::CounterTable(static_cast<std::size_t>(state.range(0))); });
}
BENCHMARK(BM_CounterTable)->Arg(10)->Arg(100)->Arg(1000);

void BM_ListHH(benchmark::State& state) {
  const double eps = 1.0 / static_cast<double>(state.range(0));
  run(state, [&] { return hh::SimpleHHSketch(config(eps)); });
}
BENCHMARK(BM_ListHH)->Arg(20)->Arg(40)->Arg(80);

void BM_ListHHOpt(benchmark::State& state) {
  const double eps = 1.0 / static_cast<double>(state.range(0));
  run(state, [&] {
    auto cfg = config(eps);
    cfg.scale = 0.0025;
    return hh::OptimalHHSketch(cfg);
  });
}
BENCHMARK(BM_ListHHOpt)->Arg(20)->Arg(40);


void BM_MinimumSmallUniverse(benchmark::State& state) {
  const auto s = hh::zipf_stream(50, 0.5, kM, 2);
  auto cfg = config(0.1);
  cfg.universe = 50;
  hh::MinimumSketch sk(cfg);
  std::size_t i = 0;
  for (auto _ : state) {
    sk.insert(s[i]);
    if (++i == s.size()) {
      state.PauseTiming();
      sk = hh::MinimumSketch(cfg);
      i = 0;
      state.ResumeTiming();
    }
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_MinimumSmallUniverse);

void BM_Borda(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  const auto votes = hh::clustered_votes(n, 1 << 16, 3);
  auto cfg = config(0.05);
  cfg.universe = n;
  cfg.stream_length = 1 << 20;
  hh::BordaSketch sk(cfg);
  std::size_t i = 0;
  for (auto _ : state) {
    sk.insert(votes[i]);
    if (++i == votes.size()) i = 0;
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_Borda)->Arg(10)->Arg(100);

}  // namespace
BENCHMARK_MAIN();
