// Serial reference vs OpenMP kernels.

#include "qcx/hydrogen3d.hpp"
#include "qcx/parallel.hpp"
#include "qcx/quadrature.hpp"
#include "qcx/specfun.hpp"

#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

namespace {

// Rakhmanov density of a high-degree Hermite polynomial: many panels, each
// with an oscillating integrand.
struct HermiteCase {
    qcx::Density1D d;
    std::vector<double> pts;
    qcx::QuadConfig cfg;

    explicit HermiteCase(int n) : d(qcx::rakhmanov_density(qcx::OrthoPolySpec::hermite(n))) {
        pts = qcx::density_breakpoints(d, cfg);
    }
};

void BM_breaks_parallel(benchmark::State& st) {
    HermiteCase c(static_cast<int>(st.range(0)));
    const qcx::Func f = [&](double x) { return std::pow(c.d.at(x), 2.5); };
    for (auto _ : st) benchmark::DoNotOptimize(qcx::integrate_breaks(f, c.pts, c.cfg).value);
}

void BM_breaks_serial(benchmark::State& st) {
    HermiteCase c(static_cast<int>(st.range(0)));
    const qcx::Func f = [&](double x) { return std::pow(c.d.at(x), 2.5); };
    for (auto _ : st) benchmark::DoNotOptimize(qcx::integrate_breaks_serial(f, c.pts, c.cfg).value);
}

std::vector<qcx::Orbital3D> sweep_states() {
    std::vector<qcx::Orbital3D> v;
    for (int n = 1; n <= 5; ++n)
        for (int l = 0; l < n; ++l) v.push_back({1.0, n, l, 0});
    return v;
}

void BM_sweep_parallel(benchmark::State& st) {
    const auto states = sweep_states();
    std::vector<double> out(states.size());
    for (auto _ : st) {
        qcx::parallel_for_ordered(states.size(), [&](std::size_t i) { out[i] = qcx::complexities(states[i]).C_FS; });
        benchmark::DoNotOptimize(out.data());
    }
}

void BM_sweep_serial(benchmark::State& st) {
    const auto states = sweep_states();
    std::vector<double> out(states.size());
    for (auto _ : st) {
        qcx::serial_for(states.size(), [&](std::size_t i) { out[i] = qcx::complexities(states[i]).C_FS; });
        benchmark::DoNotOptimize(out.data());
    }
}

}  // namespace

BENCHMARK(BM_breaks_parallel)->Arg(20)->Arg(60)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_breaks_serial)->Arg(20)->Arg(60)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_sweep_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_sweep_serial)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
