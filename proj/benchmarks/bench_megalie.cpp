#include <benchmark/benchmark.h>

#include "megalie/exactalg/closure.hpp"
#include "megalie/exactalg/matrix.hpp"
#include "megalie/sbve/generators.hpp"
#include "megalie/sbve/symmetries.hpp"
#include "megalie/sbve/vorticity.hpp"

using namespace megalie;

static void BM_BuildTruncatedAlgebra(benchmark::State& state) {
  const auto gs = sbve::generators(0, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sbve::build_truncated_algebra(gs));
}
BENCHMARK(BM_BuildTruncatedAlgebra)->Arg(4)->Arg(5)->Arg(8);

static void BM_MegaidealClosure(benchmark::State& state) {
  const auto g = sbve::build_truncated_algebra(sbve::generators(0, static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(exactalg::megaideal_closure(g));
}
BENCHMARK(BM_MegaidealClosure)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_PushforwardMatrix(benchmark::State& state) {
  const auto gs = sbve::generators(1, 4);
  const auto tr = sbve::omega_elimination(1);
  const auto target = sbve::generators(0, 4);
  for (auto _ : state) benchmark::DoNotOptimize(sbve::pushforward_matrix(gs, tr, target));
}
BENCHMARK(BM_PushforwardMatrix);

static void BM_Rref(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  exactalg::Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = exactalg::Rational(static_cast<std::int64_t>((i * 7 + j * 3) % 11) - 5, 1 + static_cast<std::int64_t>(j % 3));
  for (auto _ : state) benchmark::DoNotOptimize(exactalg::rref(m));
}
BENCHMARK(BM_Rref)->Arg(8)->Arg(16);

static void BM_ResidualOnGrid(benchmark::State& state) {
  const auto psi = symvec::Expr::mu() * symvec::Expr::s() * symvec::Expr::cos(symvec::Expr::lambda());
  for (auto _ : state) benchmark::DoNotOptimize(sbve::residual_on_grid(psi, 0.0));
}
BENCHMARK(BM_ResidualOnGrid);
BENCHMARK_MAIN();
