#include <benchmark/benchmark.h>

#include "qsparith/arithmetic.hpp"
#include "qsparith/builders.hpp"
#include "qsparith/golden_angles.hpp"
#include "qsparith/qsp.hpp"
#include "qsparith/statevector.hpp"

using namespace qsparith;

namespace {

void BM_QspResponse(benchmark::State& state) {
    const PhaseSchedule& s = golden("p2a_2x10").schedule;
    double x = -1.0;
    for (auto _ : state) {
        x = x >= 1.0 ? -1.0 : x + 1e-3;
        benchmark::DoNotOptimize(qsp_response(s, x));
    }
}
BENCHMARK(BM_QspResponse);

void BM_MergePipeline(benchmark::State& state) {
    const PhaseSchedule& p2a = golden("p2a_2x3").schedule;
    const PhaseSchedule& f = golden("f_2x22").schedule;
    const PhaseSchedule& a2p = golden("a2p_2x3").schedule;
    for (auto _ : state)
        benchmark::DoNotOptimize(qse_merged_schedule(p2a, f, a2p));
}
BENCHMARK(BM_MergePipeline);

void BM_HadamardChain(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Circuit c;
    c.n_qubits = n;
    for (int q = 0; q < n; ++q) c.append(Gate::h(q));
    for (auto _ : state) {
        Statevector s(n);
        benchmark::DoNotOptimize(apply(std::move(s), c));
    }
    state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_HadamardChain)->Arg(12)->Arg(16)->Arg(20);

void BM_QsoBlockEncoding(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    SubspaceWindow w{0.0, 2.0};
    PhaseSchedule merged = merge_phases(golden("f_2x22").schedule,
                                        golden("p2a_2x10").schedule);
    Circuit qso = build_qsp_over_kickback(merged, n, w);
    Statevector in = uniform_over_register(n + 1, 0, n);
    for (auto _ : state)
        benchmark::DoNotOptimize(hadamard_test(qso, in, n, n));
}
BENCHMARK(BM_QsoBlockEncoding)->Arg(6)->Arg(8)->Arg(10);

void BM_QftAdd(benchmark::State& state) {
    const int f = static_cast<int>(state.range(0));
    long long a = 3;
    for (auto _ : state) {
        a = (a * 5 + 1) & ((1LL << f) - 1);
        benchmark::DoNotOptimize(qft_add(a, 7 & ((1LL << f) - 1), f));
    }
}
BENCHMARK(BM_QftAdd)->Arg(6)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
