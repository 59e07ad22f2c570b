#include <benchmark/benchmark.h>

#include "markov/builtins.hpp"
#include "markov/decomposition_check.hpp"
#include "markov/expansion.hpp"
#include "markov/limit_metrics.hpp"
#include "markov/sections.hpp"

namespace {

using namespace markov;

void BM_ExpandOneEight(benchmark::State& state) {
  const auto d = builtin_diagram("one_eight").value();
  const auto report = validate_diagram(d);
  const int depth = static_cast<int>(state.range(0));
  std::size_t cells = 0;
  for (auto _ : state) {
    auto result = expand(d, report, depth);
    cells = result.levels.back().graph.vertex_count() +
            result.levels.back().graph.edge_count();
    benchmark::DoNotOptimize(result);
  }
  state.SetItemsProcessed(static_cast<int64_t>(cells) * state.iterations());
}
BENCHMARK(BM_ExpandOneEight)->DenseRange(4, 8)->Unit(benchmark::kMillisecond);

void BM_VerifyDecomposition(benchmark::State& state) {
  const auto d = builtin_diagram("one_eight").value();
  const auto result = expand(d, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto issues = verify_expansion(d, result.levels);
    benchmark::DoNotOptimize(issues);
  }
}
BENCHMARK(BM_VerifyDecomposition)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_LipschitzCheck(benchmark::State& state) {
  const auto d = builtin_diagram("one_eight").value();
  const auto result = expand(d, static_cast<int>(state.range(0)));
  const auto schedule = MetricSchedule::halving(Rational(1));
  for (auto _ : state) {
    auto report = check_lipschitz(result.levels, schedule);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_LipschitzCheck)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_BuildSections(benchmark::State& state) {
  const auto d = builtin_diagram("one_eight").value();
  const auto report = validate_diagram(d);
  const int level = static_cast<int>(state.range(0));
  const auto result = expand(d, report, level + 1);
  for (auto _ : state) {
    auto sections = build_sections(d, report, result.levels, level);
    benchmark::DoNotOptimize(sections);
  }
}
BENCHMARK(BM_BuildSections)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);

void BM_ValidateBuiltins(benchmark::State& state) {
  for (auto _ : state) {
    for (const auto& name : builtin_names()) {
      auto report = validate_diagram(builtin_diagram(name).value());
      benchmark::DoNotOptimize(report);
    }
  }
}
BENCHMARK(BM_ValidateBuiltins);

}  // namespace

BENCHMARK_MAIN();
