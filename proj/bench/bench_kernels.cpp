// Serial reference vs OpenMP kernels, plus the pseudospectral path.
#include "hwcm/linear/stability.hpp"
#include "hwcm/spectral/kernels.hpp"
#include "hwcm/spectral/nonlinear.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace hwcm;

namespace {

SpectralField field(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    SpectralField f(n);
    for (int kx = -n; kx < n; ++kx)
        for (int ky = -n; ky < n; ++ky) f[ModeIndex{kx, ky}] = {u(rng), u(rng)};
    enforce_hermitian(f);
    return f;
}

void BM_convolve_serial(benchmark::State& st) {
    const int n = static_cast<int>(st.range(0));
    const auto f = field(n, 1), g = field(n, 2);
    SpectralField out(n);
    for (auto _ : st) {
        kernels::convolve_serial(f, g, kernels::SecondFactorWeight::k_squared, out);
        benchmark::DoNotOptimize(out.data());
    }
}

void BM_convolve_parallel(benchmark::State& st) {
    const int n = static_cast<int>(st.range(0));
    const auto f = field(n, 1), g = field(n, 2);
    SpectralField out(n);
    for (auto _ : st) {
        kernels::convolve_parallel(f, g, kernels::SecondFactorWeight::k_squared, out);
        benchmark::DoNotOptimize(out.data());
    }
}

void BM_nonlinear_fft(benchmark::State& st) {
    const int n = static_cast<int>(st.range(0));
    const StateVector s(field(n, 1), field(n, 2));
    for (auto _ : st) benchmark::DoNotOptimize(nonlinear_terms_fft(s, true));
}

void BM_growth_scan(benchmark::State& st) {
    PhysParams p;
    p.kappa = 1.5;
    p.n = static_cast<int>(st.range(0));
    const auto exec = st.range(1) ? Execution::parallel : Execution::serial;
    for (auto _ : st) benchmark::DoNotOptimize(max_growth_rate(p, exec));
}

} // namespace

BENCHMARK(BM_convolve_serial)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_convolve_parallel)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_nonlinear_fft)->Arg(8)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_growth_scan)->Args({64, 0})->Args({64, 1})->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
