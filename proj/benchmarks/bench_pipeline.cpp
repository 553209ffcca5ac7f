#include <benchmark/benchmark.h>

#include "resum/approximant.hpp"
#include "resum/benchmarks.hpp"
#include "resum/optimizer.hpp"
#include "resum/transforms.hpp"

using namespace resum;

namespace {

const BenchmarkProblem& anomalous() { return benchmarks::problem("anomalous-dimension"); }

TransformKind kind_arg(const benchmark::State& state) {
  return kAllKinds[static_cast<std::size_t>(state.range(0))];
}

}  // namespace

static void BM_TransformCoefficients(benchmark::State& state) {
  const TruncatedSeries s = benchmarks::problem("gaussian-polymer").summed_series();
  const TransformKind kind = kind_arg(state);
  const double u = transforms::borel_point(kind) + 0.25;
  for (auto _ : state) {
    benchmark::DoNotOptimize(transforms::transform_coefficients(s, kind, u));
  }
  state.SetLabel(std::string(to_string(kind)));
}
BENCHMARK(BM_TransformCoefficients)->DenseRange(0, 3);

static void BM_FitIteratedRoot(benchmark::State& state) {
  std::vector<double> c(static_cast<std::size_t>(state.range(0)) + 1);
  for (std::size_t n = 0; n < c.size(); ++n) c[n] = (n % 2 ? -1.0 : 1.0) / (n + 1.0);
  const TruncatedSeries s(std::move(c));
  for (auto _ : state) {
    auto r = approximant::fit_iterated_root(s, -0.5);
    benchmark::DoNotOptimize(approximant::marginal_amplitude(r).value);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FitIteratedRoot)->DenseRange(2, 12, 2)->Complexity();

static void BM_AmplitudeAt(benchmark::State& state) {
  const auto& p = anomalous();
  const AmplitudeCurve curve{p.summed_series(), TransformKind::FractionalIntegral, p.summed_beta(),
                             3};
  for (auto _ : state) benchmark::DoNotOptimize(optimizer::amplitude_at(curve, -1.557644));
}
BENCHMARK(BM_AmplitudeAt);

static void BM_SolveMinDifference(benchmark::State& state) {
  const auto& p = anomalous();
  const auto grid = numerics::ScanGrid(-8.0, 0.0, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(optimizer::solve_min_difference(
        p.summed_series(), TransformKind::FractionalIntegral, p.summed_beta(), 2, grid));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SolveMinDifference)->RangeMultiplier(4)->Range(256, 4096)->Complexity();

static void BM_RidgeMinimize(benchmark::State& state) {
  const auto& p = anomalous();
  const auto grid = numerics::ScanGrid(-8.0, 0.0, 1601);
  for (auto _ : state) {
    benchmark::DoNotOptimize(optimizer::ridge_minimize(
        p.summed_series(), TransformKind::FractionalIntegral, p.summed_beta(), 2, grid));
  }
}
BENCHMARK(BM_RidgeMinimize)->Unit(benchmark::kMillisecond);

static void BM_AnalyzeKind(benchmark::State& state) {
  const auto& p = anomalous();
  const TransformKind kind = kind_arg(state);
  for (auto _ : state) {
    benchmark::DoNotOptimize(benchmarks::analyze_kind(p.summed_series(), p.summed_beta(), kind,
                                                      benchmarks::default_grid(kind)));
  }
  state.SetLabel(std::string(to_string(kind)));
}
BENCHMARK(BM_AnalyzeKind)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

static void BM_RunTable(benchmark::State& state) {
  const auto& t = benchmarks::reference_table(static_cast<int>(state.range(0)));
  std::vector<TransformKind> kinds;
  for (const auto& r : t.rows) kinds.push_back(r.kind);
  const std::vector<Method> methods(std::begin(kAllMethods), std::end(kAllMethods));
  for (auto _ : state) {
    benchmark::DoNotOptimize(benchmarks::run_table(benchmarks::problem(t.problem), kinds, methods));
  }
  state.SetLabel(t.problem);
}
BENCHMARK(BM_RunTable)->Arg(4)->Arg(9)->Arg(15)->Unit(benchmark::kMillisecond)->Iterations(1)->UseRealTime();

BENCHMARK_MAIN();
