#include <benchmark/benchmark.h>

#include "dsii/asymptotics.hpp"
#include "dsii/cauchy.hpp"
#include "dsii/dirac.hpp"
#include "dsii/quadrature.hpp"

using namespace dsii;

namespace {

const ConvexCurve& unit_disk() {
  static const ConvexCurve c = ConvexCurve::disk(1.0);
  return c;
}

void BM_KernelTableBuild(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    CauchyKernelTable table(n, 4.0);
    benchmark::DoNotOptimize(table.kernel_value(1, 1));
  }
}
BENCHMARK(BM_KernelTableBuild)->Arg(256)->Arg(512);

void BM_SolidCauchyGrid(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto mask = ComplexGrid::indicator(unit_disk(), n, 4.0);
  const CauchyKernelTable table(n, 4.0);
  for (auto _ : state) {
    auto out = solid_cauchy_grid(mask, table);
    benchmark::DoNotOptimize(out.values().data());
  }
}
BENCHMARK(BM_SolidCauchyGrid)->Arg(256)->Arg(512)->Arg(1024);

void BM_ApplyA(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto pb = DiracProblem::make(unit_disk(), SpectralPoint::polar(8.0, 0.0),
                                     1, n, 4.0);
  ComplexGrid u(n, 4.0);
  for (cplx& v : u.values()) v = 1.0;
  for (auto _ : state) {
    auto out = apply_A(u, pb);
    benchmark::DoNotOptimize(out.values().data());
  }
}
BENCHMARK(BM_ApplyA)->Arg(256)->Arg(512)->Arg(1024);

void BM_SolveCgo(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto pb = DiracProblem::make(unit_disk(), SpectralPoint::polar(8.0, 0.0),
                                     1, n, 4.0);
  for (auto _ : state) {
    auto sol = solve_cgo(pb, 1e-10, 64);
    benchmark::DoNotOptimize(sol.residual_norm);
  }
}
BENCHMARK(BM_SolveCgo)->Arg(256)->Arg(512);

void BM_SolidCauchyOracle(benchmark::State& state) {
  const int qn = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto r = solid_cauchy_oracle(unit_disk(), cplx(0.4, 0.2), qn);
    benchmark::DoNotOptimize(r.value);
  }
}
BENCHMARK(BM_SolidCauchyOracle)->Arg(128)->Arg(512);

void BM_LeadingTerm(benchmark::State& state) {
  const auto k = SpectralPoint::polar(100.0, 0.4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(leading_term(unit_disk(), k));
  }
}
BENCHMARK(BM_LeadingTerm);

void BM_ReflectionAsymptotic(benchmark::State& state) {
  AsymptoticConfig cfg;
  cfg.d_omega_source = DOmegaSource::ClosedFormDisk;
  const auto k = SpectralPoint::polar(100.0, 0.4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(reflection_asymptotic(unit_disk(), k, cfg));
  }
}
BENCHMARK(BM_ReflectionAsymptotic);

}  // namespace

BENCHMARK_MAIN();
