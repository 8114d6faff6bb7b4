#include <benchmark/benchmark.h>

#include <numbers>

#include "revolve/area.hpp"
#include "revolve/mesh.hpp"

using namespace revolve;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void BM_EvalExpr(benchmark::State& state) {
  const ExprPtr e = parse("sin(t)*exp(t/4)-t^3/7+sqrt(t+2)");
  double t = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval(e, t));
    t += 1e-3;
  }
}
BENCHMARK(BM_EvalExpr);

void BM_Differentiate(benchmark::State& state) {
  const ExprPtr e = parse("sin(t)*exp(t/4)-t^3/7+sqrt(t+2)");
  for (auto _ : state) {
    benchmark::DoNotOptimize(differentiate(e));
  }
}
BENCHMARK(BM_Differentiate);

void BM_TorusArea(benchmark::State& state) {
  const ParametricCurve circle = make_curve("cos(t)", "sin(t)", 0.0, kTwoPi);
  const Line line = make_line(3.0, 4.0, 25.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(surface_area(circle, line).area);
  }
}
BENCHMARK(BM_TorusArea);

void BM_SlantGraphArea(benchmark::State& state) {
  const ParametricCurve graph = from_graph("t^2-3*t+12", 0.0, 3.0);
  const Line line = make_line(3.0, 4.0, 0.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(surface_area(graph, line).area);
  }
}
BENCHMARK(BM_SlantGraphArea);

void BM_RevolveMesh(benchmark::State& state) {
  const ParametricCurve circle = make_curve("cos(t)", "sin(t)", 0.0, kTwoPi);
  const Line line = make_line(3.0, 4.0, 25.0);
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mesh_area(revolve_mesh(circle, line, n, n)));
  }
}
BENCHMARK(BM_RevolveMesh)->Arg(64)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
