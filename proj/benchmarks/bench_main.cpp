#include <benchmark/benchmark.h>

#include <array>

#include "shadow/cap_cover.hpp"
#include "shadow/constructions.hpp"
#include "shadow/domain.hpp"
#include "shadow/expression.hpp"
#include "shadow/solver.hpp"

namespace {

using namespace shadow;

const ShadowConfig& four_balls() {
  static const ShadowConfig cfg = lemma2_unit_sphere(tune_lemma2());
  return cfg;
}

void BM_CoversSphereExact(benchmark::State& state) {
  const CapFamily caps = caps_of(four_balls().x0, four_balls().balls);
  for (auto _ : state) benchmark::DoNotOptimize(covers_sphere_exact(caps));
}
BENCHMARK(BM_CoversSphereExact)->Unit(benchmark::kMillisecond);

void BM_SamplingOracle(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        find_escape_sampling(four_balls().x0, four_balls().balls, static_cast<std::size_t>(state.range(0))));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SamplingOracle)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_EstimateInradius(benchmark::State& state) {
  const Domain d = Domain::implicit(Expression::parse("x^2/16 + y^2 + z^2 - 1", 3));
  const Point x0(0.0, 0.0, 0.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(estimate_inradius(d, x0, static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_EstimateInradius)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

void BM_FourBallSolveBox(benchmark::State& state) {
  const Domain box = Domain::mesh(
      {Vec(-1, -1, -1), Vec(1, -1, -1), Vec(1, 1, -1), Vec(-1, 1, -1), Vec(-1, -1, 1), Vec(1, -1, 1), Vec(1, 1, 1),
       Vec(-1, 1, 1)},
      {{0, 2, 1}, {0, 3, 2}, {4, 5, 6}, {4, 6, 7}, {0, 1, 5}, {0, 5, 4},
       {1, 2, 6}, {1, 6, 5}, {2, 3, 7}, {2, 7, 6}, {3, 0, 4}, {3, 4, 7}});
  const Point x0(0.2, 0.0, -0.1);
  four_balls();
  for (auto _ : state) benchmark::DoNotOptimize(theorem2_construct(box, x0));
}
BENCHMARK(BM_FourBallSolveBox)->Unit(benchmark::kMillisecond);

void BM_ExpressionCompiled(benchmark::State& state) {
  const Expression e = Expression::parse("min(max(abs(x) - 2, abs(y) - 1), max(abs(x) - 1, abs(y) - 2))", 2);
  const std::array<double, 2> p{0.3, -1.7};
  for (auto _ : state) benchmark::DoNotOptimize(e(p));
}
BENCHMARK(BM_ExpressionCompiled);

void BM_ExpressionTree(benchmark::State& state) {
  const Expression e = Expression::parse("min(max(abs(x) - 2, abs(y) - 1), max(abs(x) - 1, abs(y) - 2))", 2);
  const std::array<double, 2> p{0.3, -1.7};
  for (auto _ : state) benchmark::DoNotOptimize(e.evaluate_tree(p));
}
BENCHMARK(BM_ExpressionTree);

}  // namespace
BENCHMARK_MAIN();
