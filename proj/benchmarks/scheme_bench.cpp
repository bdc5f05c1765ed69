#include <benchmark/benchmark.h>

#include "realgas/fv_scheme.hpp"
#include "realgas/problems.hpp"

namespace {

using namespace realgas;

void BM_Step1D(benchmark::State& state, Scheme scheme) {
  const ProblemSpec p = load_problem("shyue");
  const Field1D start = make_field_1d(p, static_cast<int>(state.range(0)));
  SchemeOptions opt;
  opt.scheme = scheme;
  const double dt = cfl_dt(start, opt.cfl);
  for (auto _ : state) {
    state.PauseTiming();
    Field1D f = start;
    state.ResumeTiming();
    benchmark::DoNotOptimize(advance_1d(f, dt, opt));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK_CAPTURE(BM_Step1D, godunov, Scheme::Godunov)->Arg(400);
BENCHMARK_CAPTURE(BM_Step1D, grp, Scheme::Grp)->Arg(400);

void BM_Step2D(benchmark::State& state) {
  const ProblemSpec p = load_problem("rp2d");
  const int n = static_cast<int>(state.range(0));
  const Field2D start = make_field_2d(p, n, n);
  const SchemeOptions opt;
  const double dt = cfl_dt(start, opt.cfl);
  for (auto _ : state) {
    state.PauseTiming();
    Field2D f = start;
    state.ResumeTiming();
    benchmark::DoNotOptimize(advance_2d(f, dt, opt));
  }
  state.SetItemsProcessed(state.iterations() * n * n);
}
BENCHMARK(BM_Step2D)->Arg(64)->Unit(benchmark::kMillisecond);

}  // namespace
