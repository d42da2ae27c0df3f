#include <benchmark/benchmark.h>

#include "galperin/base_repr.hpp"
#include "galperin/closed_form.hpp"
#include "galperin/dynamics.hpp"

using namespace galperin;

namespace {

BilliardSpec spec_for(long b, long N) {
    BilliardSpec s;
    s.base = Real(b);
    s.mantissa = N;
    return s;
}

void BM_SimulateInterval(benchmark::State& state) {
    const auto spec = spec_for(10, state.range(0));
    long events = 0;
    for (auto _ : state) {
        auto run = simulate_certified(
            spec, default_policy(spec), -1,
            [](long, CollisionKind, const KinematicState<Interval>&, const Interval&) {}, [](long) {});
        events = run.events;
        benchmark::DoNotOptimize(run);
    }
    state.counters["events"] = static_cast<double>(events);
    state.counters["events/s"] =
        benchmark::Counter(static_cast<double>(events), benchmark::Counter::kIsIterationInvariantRate);
}
BENCHMARK(BM_SimulateInterval)->DenseRange(1, 5)->Unit(benchmark::kMillisecond);

void BM_SimulateRational(benchmark::State& state) {
    const auto sys = make_system<Rational>(spec_for(10, state.range(0)));
    for (auto _ : state) {
        auto run = simulate_stream(sys, -1, [](long, CollisionKind, const KinematicState<Rational>&,
                                               const Rational&) {});
        benchmark::DoNotOptimize(run);
    }
}
BENCHMARK(BM_SimulateRational)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_CountExact(benchmark::State& state) {
    const Rational N(static_cast<long>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(count_collisions_exact(Real(10), N));
}
BENCHMARK(BM_CountExact)->Arg(1)->Arg(10)->Arg(100)->Arg(1000)->Unit(benchmark::kMicrosecond);

void BM_ClosedFormSequence(benchmark::State& state) {
    const auto sys = make_system<Rational>(spec_for(10, state.range(0)));
    const long count = count_collisions_exact(Real(10), state.range(0)).get_si();
    for (auto _ : state) {
        ClosedFormSequence<Rational> seq(sys);
        for (long n = 0; n < count; ++n) benchmark::DoNotOptimize(seq.next());
    }
}
BENCHMARK(BM_ClosedFormSequence)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_StateAtInterval(benchmark::State& state) {
    const auto spec = spec_for(10, 6);
    PrecisionScope scope(256);
    const auto sys = make_system<Interval>(spec);
    for (auto _ : state) benchmark::DoNotOptimize(state_at(state.range(0), sys));
}
BENCHMARK(BM_StateAtInterval)->RangeMultiplier(10)->Range(10, 1000000)->Unit(benchmark::kMicrosecond);

void BM_ExpandPhi(benchmark::State& state) {
    const Real x(Golden(Rational(386)) / Golden::phi_pow(10));
    for (auto _ : state) benchmark::DoNotOptimize(expand(x, Real::phi(), state.range(0)));
}
BENCHMARK(BM_ExpandPhi)->RangeMultiplier(4)->Range(16, 1024)->Unit(benchmark::kMicrosecond);

void BM_ExpandPi(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(expand(Real(Rational(294204)), Real::pi(), state.range(0)));
}
BENCHMARK(BM_ExpandPi)->RangeMultiplier(4)->Range(16, 256)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
