#include <benchmark/benchmark.h>

#include <numbers>

#include "lgsim/full_lgi.hpp"
#include "lgsim/protocol.hpp"
#include "lgsim/sampling.hpp"
#include "lgsim/telegraph.hpp"

using namespace lgsim;
using std::numbers::pi;

namespace {

ProtocolParams working_point() {
    ProtocolParams p;
    p.theta1 = pi / 2;
    p.theta2 = pi / 2;
    return p;
}

void BM_ClosedForm(benchmark::State& state) {
    double acc = 0.0;
    for (auto _ : state) {
        acc += closed_form_q3(0.7, 1.3, 18e-9, 10e-9, false);
    }
    benchmark::DoNotOptimize(acc);
}
BENCHMARK(BM_ClosedForm);

void BM_RunEnsemble(benchmark::State& state) {
    const ProtocolParams p = working_point();
    double acc = 0.0;
    for (auto _ : state) {
        acc += run_ensemble(p, state.range(0) != 0).q3;
    }
    benchmark::DoNotOptimize(acc);
}
BENCHMARK(BM_RunEnsemble)->Arg(0)->Arg(1);

void BM_RunEnsembleSelective(benchmark::State& state) {
    const ProtocolParams p = working_point();
    double acc = 0.0;
    for (auto _ : state) {
        acc += *run_ensemble(p, true, true).corr_q2q3;
    }
    benchmark::DoNotOptimize(acc);
}
BENCHMARK(BM_RunEnsembleSelective);

void BM_FullReport(benchmark::State& state) {
    FullProtocolParams p;
    p.theta_a = 0.3;
    p.theta_b = pi / 2;
    p.theta_c = pi / 2;
    double acc = 0.0;
    for (auto _ : state) {
        acc += full_report(p).lgi.lhs;
    }
    benchmark::DoNotOptimize(acc);
}
BENCHMARK(BM_FullReport);

void BM_TelegraphExact(benchmark::State& state) {
    const TelegraphModel m{0.4, 0.25, 0.3, 0.1};
    double acc = 0.0;
    for (auto _ : state) {
        acc += enumerate_exact(m, true).q3;
    }
    benchmark::DoNotOptimize(acc);
}
BENCHMARK(BM_TelegraphExact);

void BM_SampleProtocol(benchmark::State& state) {
    const ProtocolParams p = working_point();
    const auto shots = static_cast<std::uint64_t>(state.range(0));
    std::uint64_t seed = 1;
    double acc = 0.0;
    for (auto _ : state) {
        acc += sample_protocol(p, false, shots, seed++).estimate;
    }
    benchmark::DoNotOptimize(acc);
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SampleProtocol)->Range(1 << 10, 1 << 18);

}  // namespace

BENCHMARK_MAIN();
