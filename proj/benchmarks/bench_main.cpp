#include <benchmark/benchmark.h>

#include "g2adm/g2adm.hpp"

namespace {

using namespace g2adm;

const SiegelMatrix& sample_tau() {
  static const SiegelMatrix tau(Complex(0.1, 1.0), Complex(0.2, 0.3), Complex(0.2, 0.3),
                                Complex(-0.1, 1.2));
  return tau;
}

void BM_Theta(benchmark::State& state) {
  ThetaOptions opts;
  opts.tol = std::pow(10.0, -static_cast<double>(state.range(0)));
  const CVec2 z{Complex(0.3, 0.1), Complex(-0.2, 0.25)};
  for (auto _ : state) benchmark::DoNotOptimize(theta_scaled(ThetaChar{}, z, sample_tau(), opts));
}
BENCHMARK(BM_Theta)->Arg(6)->Arg(12);

void BM_LogDelta2(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(log_delta2(sample_tau()));
}
BENCHMARK(BM_LogDelta2);

void BM_LogH(benchmark::State& state) {
  QuadratureConfig q;
  q.samples = static_cast<std::uint64_t>(state.range(0));
  q.method = state.range(1) ? QuadratureMethod::LatticeRule : QuadratureMethod::MonteCarlo;
  for (auto _ : state) benchmark::DoNotOptimize(log_h(sample_tau(), q).mean);
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_LogH)->Args({100'000, 0})->Args({100'000, 1})->Unit(benchmark::kMillisecond);

void BM_NonarchReport(benchmark::State& state) {
  const auto tag = static_cast<FiberTag>(state.range(0));
  std::vector<Rational> params;
  for (std::size_t i = 0; i < arity(tag); ++i) params.push_back(rational(static_cast<long>(3 + 2 * i), 7));
  const PMGraph g = graph_of_type(FiberType(tag, params));
  state.SetLabel(std::string(tag_name(tag)));
  for (auto _ : state) benchmark::DoNotOptimize(nonarch_report(g));
}
BENCHMARK(BM_NonarchReport)->DenseRange(0, 6)->Unit(benchmark::kMicrosecond);

void BM_EffectiveResistance(benchmark::State& state) {
  const PMGraph g = graph_of_type(FiberType(FiberTag::VII, {1, 2, 3}));
  const GraphPoint x = GraphPoint::on_edge(g, 0, rational(1, 3));
  const GraphPoint y = GraphPoint::on_edge(g, 2, rational(5, 2));
  for (auto _ : state) benchmark::DoNotOptimize(effective_resistance(g, x, y));
}
BENCHMARK(BM_EffectiveResistance)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
