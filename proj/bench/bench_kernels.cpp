#include <benchmark/benchmark.h>

#include "cheeger/cayley.hpp"
#include "cheeger/iso_constants.hpp"
#include "cheeger/lambda_inf.hpp"

using namespace cheeger;

namespace
{

Execution mode(benchmark::State const &state)
{
  return state.range(1) == 0 ? Execution::serial : Execution::parallel;
}

void set_label(benchmark::State &state)
{
  state.SetLabel(state.range(1) == 0 ? "serial" : "parallel");
}

void BM_CheegerH(benchmark::State &state)
{
  auto const g = cycle_graph(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(cheeger_h(g, {}, mode(state)).value);
  set_label(state);
}

void BM_VertexIsoHOut(benchmark::State &state)
{
  auto const g = hypercube_graph(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(vertex_iso_h_out(g, {}, mode(state)).value);
  set_label(state);
}

void BM_SignedHOut(benchmark::State &state)
{
  auto const g = cycle_graph(static_cast<int>(state.range(0)));
  auto const sigma = Signature::all_minus(g);
  auto const pi = VertexMeasure::counting(g.order());
  for (auto _ : state)
    benchmark::DoNotOptimize(signed_h_out(g, sigma, pi, {}, mode(state)).value);
  set_label(state);
}

void BM_FrustrationEdge(benchmark::State &state)
{
  auto const g = petersen_graph();
  auto const sigma = Signature::all_minus(g);
  auto const all = VertexSet::full(static_cast<std::size_t>(g.order()));
  for (auto _ : state)
    benchmark::DoNotOptimize(frustration_edge(g, sigma, all, 1.0, {}, mode(state)).value);
  set_label(state);
}

void BM_LambdaInf(benchmark::State &state)
{
  auto const g = petersen_graph();
  auto const sigma = Signature::all_minus(g);
  auto const pi = VertexMeasure::counting(g.order());
  LambdaOptions opts;
  opts.iterations = static_cast<int>(state.range(0));
  opts.exec = mode(state);
  for (auto _ : state)
    benchmark::DoNotOptimize(lambda_inf_bracket(g, sigma, pi, opts).upper);
  set_label(state);
}

} // namespace

BENCHMARK(BM_CheegerH)->ArgsProduct({{14, 18}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VertexIsoHOut)->ArgsProduct({{4}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SignedHOut)->ArgsProduct({{9, 11}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FrustrationEdge)->ArgsProduct({{0}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LambdaInf)->ArgsProduct({{500}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
