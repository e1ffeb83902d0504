// Serial reference vs OpenMP kernels of the model verifiers.
#include <benchmark/benchmark.h>

#include "dtwist/model/verify.hpp"

using namespace dtwist::model;

namespace {

void run(benchmark::State& state, const char* name, Exec exec) {
    ModelOptions o;
    o.kind = InvolutionKind::R;
    o.dim = 2;
    o.samples = static_cast<std::size_t>(state.range(0));
    o.exec = exec;
    for (auto _ : state) {
        auto r = run_model_verifier(name, o);
        benchmark::DoNotOptimize(r.residuals.data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

#define DTWIST_BENCH(tag, name)                                                                         \
    void tag##_serial(benchmark::State& s) { run(s, name, Exec::Serial); }                              \
    void tag##_parallel(benchmark::State& s) { run(s, name, Exec::Parallel); }                          \
    BENCHMARK(tag##_serial)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);                      \
    BENCHMARK(tag##_parallel)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

DTWIST_BENCH(twist, "twist")
DTWIST_BENCH(lemma, "lemma")
DTWIST_BENCH(handle, "handle")
DTWIST_BENCH(suspension_ode, "suspension-ode")
DTWIST_BENCH(splitting, "splitting")

}  // namespace

BENCHMARK_MAIN();
