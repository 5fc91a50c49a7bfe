#include <benchmark/benchmark.h>

#include "pfwave/pfwave.hpp"

namespace {

const pfwave::PacketSpec kSource{0.0, 0.5};
const pfwave::PacketSpec kDetector{2.0, 0.5};

void BM_FieldPoint(benchmark::State& state) {
  double x = -3.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(pfwave::field(x, 0.25, kSource));
    x += 1e-6;
  }
}
BENCHMARK(BM_FieldPoint);

void BM_FieldSnapshot(benchmark::State& state) {
  const pfwave::Grid grid = pfwave::make_edge_avoiding_grid(kSource, -3.0, 3.0,
                                                            static_cast<int>(state.range(0)), 0.25);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pfwave::closed_form_snapshot(kSource, grid, 0.25));
  }
}
BENCHMARK(BM_FieldSnapshot)->Arg(1201)->Arg(4801);

void BM_OverlapKernel(benchmark::State& state) {
  double u = -4.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(pfwave::overlap_kernel(u, 0.5));
    u += 1e-6;
  }
}
BENCHMARK(BM_OverlapKernel);

void BM_OverlapSeries(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(pfwave::make_overlap_series(kDetector, kSource, 4.0, 1e-3));
  }
}
BENCHMARK(BM_OverlapSeries);

void BM_QuadratureProbe(benchmark::State& state) {
  pfwave::SpectralConfig cfg = pfwave::SpectralConfig::defaults();
  cfg.n_k = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pfwave::evolve_by_quadrature(0.8, 1.0, kSource, cfg));
  }
}
BENCHMARK(BM_QuadratureProbe)->Arg(1 << 18)->Arg(1 << 22)->Unit(benchmark::kMillisecond);

void BM_OverlapQuadrature(benchmark::State& state) {
  const pfwave::SpectralConfig cfg = pfwave::SpectralConfig::defaults();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        pfwave::detector_overlap_by_quadrature(1.5, kDetector, kSource, cfg));
  }
}
BENCHMARK(BM_OverlapQuadrature)->Unit(benchmark::kMillisecond);

void BM_DftEvolve(benchmark::State& state) {
  const pfwave::SpectralConfig cfg = pfwave::SpectralConfig::defaults();
  for (auto _ : state) {
    benchmark::DoNotOptimize(pfwave::evolve_by_dft(kSource, 1.0, cfg));
  }
}
BENCHMARK(BM_DftEvolve)->Unit(benchmark::kMillisecond);

void BM_RenderFigure(benchmark::State& state) {
  pfwave::FigureRequest req;
  req.figure = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(pfwave::render_figure(req));
  }
}
BENCHMARK(BM_RenderFigure)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
