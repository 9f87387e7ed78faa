#include <benchmark/benchmark.h>

#include <random>

#include "twistk/abelian.hpp"
#include "twistk/closedform.hpp"
#include "twistk/khorami.hpp"
#include "twistk/segal.hpp"

using namespace twistk;
using closedform::Family;
using closedform::GroupId;

static void BM_BraunSweep(benchmark::State& state)
{
    GroupId g2(Family::G2);
    for (auto _ : state) {
        Int acc = 0;
        for (Int h = 1; h <= state.range(0); ++h)
            acc += closedform::braun_c(g2, h);
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_BraunSweep)->Arg(1000)->Arg(10000);

static void BM_DouglasSpSweep(benchmark::State& state)
{
    for (auto _ : state) {
        closedform::DouglasSpSweep sweep(2);
        Int acc = 0;
        for (int h = 1; h <= state.range(0); ++h)
            acc += sweep.next();
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_DouglasSpSweep)->Arg(1000)->Arg(10000);

static void BM_DouglasG2(benchmark::State& state)
{
    Int h = 720720;
    for (auto _ : state)
        benchmark::DoNotOptimize(closedform::douglas_g2(h));
}
BENCHMARK(BM_DouglasG2);

static void BM_SegalKOrders(benchmark::State& state)
{
    GroupId g2(Family::G2);
    Int h = state.range(0);
    for (auto _ : state)
        benchmark::DoNotOptimize(segal::k_orders(g2, h));
}
BENCHMARK(BM_SegalKOrders)->Arg(60)->Arg(720720);

static void BM_SmithNormalForm(benchmark::State& state)
{
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> entry(-9, 9);
    std::size_t n = state.range(0);
    abelian::IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m.at(i, j) = entry(rng);
    for (auto _ : state)
        benchmark::DoNotOptimize(abelian::smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(6);

static void BM_RingBuild(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(khorami::TruncatedRing(state.range(0)));
}
BENCHMARK(BM_RingBuild)->Arg(16)->Arg(64);

static void BM_TensorOverR(benchmark::State& state)
{
    khorami::TruncatedRing ring(16);
    for (auto _ : state)
        benchmark::DoNotOptimize(khorami::tensor_over_r(180, ring));
}
BENCHMARK(BM_TensorOverR);

BENCHMARK_MAIN();
