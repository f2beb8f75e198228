#include <benchmark/benchmark.h>

#include "bilav/bilinear.hpp"
#include "bilav/expsum.hpp"
#include "bilav/gram.hpp"
#include "bilav/kernel.hpp"
#include "bilav/rng.hpp"
#include "bilav/roth.hpp"
#include "bilav/spectral.hpp"

namespace {

using namespace bilav;

Curve quad_curve(u64 p) {
    PrimeField f(p);
    return Curve::from_polys(f, make_poly(f, {0, 1}), make_poly(f, {0, 0, 1}));
}

void BM_KernelNaive(benchmark::State& state) {
    const Curve c = quad_curve(static_cast<u64>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_kernel_table(c, KernelBuild::naive));
    }
}
BENCHMARK(BM_KernelNaive)->Arg(101)->Arg(251)->Unit(benchmark::kMillisecond);

void BM_KernelFast(benchmark::State& state) {
    const Curve c = quad_curve(static_cast<u64>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_kernel_table(c, KernelBuild::fast));
    }
}
BENCHMARK(BM_KernelFast)->Arg(101)->Arg(251)->Arg(1009)->Unit(benchmark::kMillisecond);

void BM_Transform(benchmark::State& state) {
    const u64 p = static_cast<u64>(state.range(0));
    PrimeField f(p);
    DftPlan plan(f);
    Rng rng(7);
    GridFunction in(p), out(p);
    for (auto& v : in) v = rng.next_cgauss();
    for (auto _ : state) {
        plan.apply(in, out, -1);
        benchmark::DoNotOptimize(out.data());
    }
}
BENCHMARK(BM_Transform)->Arg(251)->Arg(1009)->Arg(4093)->Unit(benchmark::kMicrosecond);

void BM_FourfoldGram(benchmark::State& state) {
    const Curve c = quad_curve(static_cast<u64>(state.range(0)));
    const KernelTable k = build_kernel_table(c, KernelBuild::fast);
    for (auto _ : state) {
        benchmark::DoNotOptimize(fourfold_gram(k, 1));
    }
}
BENCHMARK(BM_FourfoldGram)->Arg(101)->Arg(251)->Unit(benchmark::kMillisecond);

void BM_CountTriplets(benchmark::State& state) {
    const u64 p = static_cast<u64>(state.range(0));
    const Curve c = quad_curve(p);
    const SubsetA a = random_subset(p, 0.4, 11);
    for (auto _ : state) {
        benchmark::DoNotOptimize(count_triplets(c, a));
    }
}
BENCHMARK(BM_CountTriplets)->Arg(1009)->Arg(4093)->Unit(benchmark::kMillisecond);

void BM_ConstrainedSum(benchmark::State& state) {
    const u64 p = static_cast<u64>(state.range(0));
    PrimeField f(p);
    const Curve c = Curve::from_polys(f, make_poly(f, {0, 0, 1}), make_poly(f, {0, 0, 0, 1}));
    for (auto _ : state) {
        benchmark::DoNotOptimize(constrained_exp_sum(c, ConstrainedSumSpec{2, 5, 1}));
    }
}
BENCHMARK(BM_ConstrainedSum)->Arg(31)->Arg(61)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
