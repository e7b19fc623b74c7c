#include <benchmark/benchmark.h>

#include "ddlab/charts.hpp"
#include "ddlab/dynamics.hpp"

using namespace ddlab;

namespace {

const OscillatorParams params = make_params(1.0, 0.2, 1.0);

void bm_rk4_step(benchmark::State& st) {
    SectorState s = to_sector({1.0, 0.4, 0.3, -0.6});
    for (auto _ : st) {
        s = dynamics::rk4_step(s, params, 1e-3);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(bm_rk4_step);

void bm_splitting_step(benchmark::State& st) {
    SectorState s = to_sector({1.0, 0.4, 0.3, -0.6});
    for (auto _ : st) {
        s = dynamics::splitting_step(s, params, 1e-3);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(bm_splitting_step);

void bm_exact_solution(benchmark::State& st) {
    const DoubledState s0{1.0, 0.4, 0.3, -0.6};
    double t = 0.0;
    for (auto _ : st) {
        t += 1e-3;
        benchmark::DoNotOptimize(dynamics::exact_solution(s0, params, t));
    }
}
BENCHMARK(bm_exact_solution);

void bm_simulate_period(benchmark::State& st) {
    const dynamics::IntegratorSpec spec{dynamics::Method::RK4, params.period() / 1000, params.period()};
    for (auto _ : st) benchmark::DoNotOptimize(dynamics::simulate({1.0, 0.4, 0.3, -0.6}, params, spec));
}
BENCHMARK(bm_simulate_period)->Unit(benchmark::kMicrosecond);

void bm_action_chart(benchmark::State& st) {
    const DoubledState s{1.0, 0.4, 0.3, -0.6};
    for (auto _ : st) benchmark::DoNotOptimize(to_chart(s, Chart::ACTION, params));
}
BENCHMARK(bm_action_chart);

}  // namespace
