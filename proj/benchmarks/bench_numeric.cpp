#include <benchmark/benchmark.h>

#include "hrlab/flows.hpp"
#include "hrlab/hilbert.hpp"
#include "hrlab/periods.hpp"

using hrlab::CMatrix;
using hrlab::Complex;

namespace {

CMatrix diagonal_tau(Eigen::Index g) {
  CMatrix t = CMatrix::Identity(g, g) * Complex(0, 1);
  for (Eigen::Index i = 0; i + 1 < g; ++i) t(i, i + 1) = t(i + 1, i) = Complex(0.1, 0.05);
  return t;
}

void BM_PeriodMatrices(benchmark::State& state) {
  const hrlab::SiegelPoint tau(diagonal_tau(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hrlab::period_matrices(hrlab::standard_bases(tau).hodge));
}
BENCHMARK(BM_PeriodMatrices)->DenseRange(1, 3);

void BM_EisensteinValues(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(hrlab::eisenstein_values(Complex(0.1, 1.2)));
}
BENCHMARK(BM_EisensteinValues);

void BM_IntegrateRK4(benchmark::State& state) {
  const Complex t0{0, 2}, t1{0, 1.5};
  const hrlab::OdeState start{hrlab::Chart::e_chart, hrlab::eisenstein_values(t0), t0};
  const double step = 1.0 / static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hrlab::integrate_g1(start, t1, step));
}
BENCHMARK(BM_IntegrateRK4)->Arg(100)->Arg(1000);

void BM_DensityProbe(benchmark::State& state) {
  CMatrix t(1, 1);
  t(0, 0) = Complex(0, 1);
  const hrlab::SiegelPoint tau(t);
  const CMatrix delta = CMatrix::Identity(2, 2);
  for (auto _ : state) benchmark::DoNotOptimize(hrlab::density_probe(delta, tau, 2, 60, 42));
}
BENCHMARK(BM_DensityProbe)->Unit(benchmark::kMillisecond);

void BM_HilbertHodge(benchmark::State& state) {
  const auto ctx = hrlab::field_context(5);
  for (auto _ : state) benchmark::DoNotOptimize(hrlab::hilbert_hodge_check(ctx, {Complex(0.2, 1.1), Complex(-0.3, 0.7)}));
}
BENCHMARK(BM_HilbertHodge);

}  // namespace
