#include <benchmark/benchmark.h>

#include <complex>

#include "capa_isac/channel.hpp"
#include "capa_isac/rates.hpp"
#include "capa_isac/scene.hpp"
#include "capa_isac/subspace.hpp"

using namespace capa_isac;

static void BM_GainClosedForm(benchmark::State& state) {
    const Scene s = default_scene();
    for (auto _ : state)
        benchmark::DoNotOptimize(gain_closed_form(s, Endpoint::Cu, Aperture::Transmit));
}
BENCHMARK(BM_GainClosedForm);

static void BM_GainQuadrature(benchmark::State& state) {
    const Scene s = default_scene();
    for (auto _ : state)
        benchmark::DoNotOptimize(gain_quadrature(s, Endpoint::Cu, Aperture::Transmit));
}
BENCHMARK(BM_GainQuadrature);

static void BM_CorrelationChebyshev(benchmark::State& state) {
    const Scene s = default_scene();
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(correlation_chebyshev(s, Aperture::Transmit, n));
}
BENCHMARK(BM_CorrelationChebyshev)->Arg(50)->Arg(200)->Arg(800);

static void BM_KktPareto(benchmark::State& state) {
    const Scene s = default_scene();
    const ChannelGains g = closed_form_gains(s);
    const SubspaceGeometry geo{g.cu_tx, g.target_tx,
                               correlation_chebyshev(s, Aperture::Transmit, 200)};
    int i = 0;
    for (auto _ : state) {
        const double eps = (i = (i + 1) % 1001) / 1000.0;
        benchmark::DoNotOptimize(achieved_gains(kkt_pareto(eps, geo), geo));
    }
}
BENCHMARK(BM_KktPareto);

static void BM_ParetoGridOracle(benchmark::State& state) {
    const Scene s = default_scene();
    const ChannelGains g = closed_form_gains(s);
    const SubspaceGeometry geo{g.cu_tx, g.target_tx,
                               correlation_chebyshev(s, Aperture::Transmit, 200)};
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(pareto_grid_oracle(0.5, geo, n));
}
BENCHMARK(BM_ParetoGridOracle)->Arg(400)->Arg(2000)->Unit(benchmark::kMillisecond);

static void BM_DlRegion(benchmark::State& state) {
    const Scene s = default_scene();
    const ChannelData ch = compute_channel(s);
    for (auto _ : state)
        benchmark::DoNotOptimize(dl_rate_region(s, ch.gains, ch.corr.tx, 101));
}
BENCHMARK(BM_DlRegion)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
