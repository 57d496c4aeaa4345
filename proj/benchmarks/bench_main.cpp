#include <benchmark/benchmark.h>

#include "hlzeta/franel.hpp"
#include "hlzeta/hlseries.hpp"
#include "hlzeta/lattice.hpp"
#include "hlzeta/specfun.hpp"

using namespace hlzeta;

static void BM_EvalF(benchmark::State& st) {
    double x = static_cast<double>(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(eval_f(x).value);
}
BENCHMARK(BM_EvalF)->Arg(10)->Arg(1000)->Arg(100000);

static void BM_HurwitzZeta(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(hurwitz_zeta(3.0, 0.37).value);
}
BENCHMARK(BM_HurwitzZeta);

static void BM_ChiHalfAccel(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(chi_half_accel_tol(4.0, 1e-13).result.value);
}
BENCHMARK(BM_ChiHalfAccel);

// the direct alternating sum the accelerated form replaces
static void BM_ChiHalfDirect(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(chi_direct(0.5, 4.0, 1e-9).result.value);
}
BENCHMARK(BM_ChiHalfDirect)->Unit(benchmark::kMillisecond);

static void BM_Theta4Cubed(benchmark::State& st) {
    auto method = st.range(0) ? ThetaMethod::andrews : ThetaMethod::direct_cube;
    auto q = ThetaArg::from_q(0.7);
    for (auto _ : st) benchmark::DoNotOptimize(theta4_cubed(q, method).value);
}
BENCHMARK(BM_Theta4Cubed)->Arg(0)->Arg(1);

static void BM_Franel2Oracle(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(franel2_oracle(3, 4, 1e-10).value);
}
BENCHMARK(BM_Franel2Oracle)->Unit(benchmark::kMillisecond);

static void BM_Franel2Closed(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(franel2_closed(5, 6).numeric());
}
BENCHMARK(BM_Franel2Closed)->Unit(benchmark::kMicrosecond);

static void BM_K0Complex(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(bessel_k_complex(0.0, cplx(3.0, 4.0)).value);
}
BENCHMARK(BM_K0Complex);
BENCHMARK_MAIN();
