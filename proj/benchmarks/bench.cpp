// Microbenchmarks for the hot paths: pistol enumeration, the forward and
// backward maps, single gluing steps, the polynomial recursions and the
// box-bounded shape search.

#include <benchmark/benchmark.h>

#include <kshape/bijection.hpp>
#include <kshape/oracle.hpp>
#include <kshape/polynomial.hpp>

namespace {

using namespace kshape;

void BM_EnumeratePistols(benchmark::State& state) {
    const int h = static_cast<int>(state.range(0));
    for (auto _ : state) {
        long long n = 0;
        enumerate_pistols(h, [&](const Pistol&) { ++n; });
        benchmark::DoNotOptimize(n);
    }
}
BENCHMARK(BM_EnumeratePistols)->Arg(4)->Arg(5)->Arg(6);

void BM_Varphi(benchmark::State& state) {
    const Pistol f({2, 8, 4, 10, 10, 6, 8, 10, 10, 10});
    for (auto _ : state) {
        Partition image = varphi(f);
        benchmark::DoNotOptimize(image);
    }
}
BENCHMARK(BM_Varphi);

void BM_Phi(benchmark::State& state) {
    const Partition p({12, 9, 7, 6, 5, 3, 3, 2, 1, 1, 1, 1});
    for (auto _ : state) {
        Pistol f = phi(p, 6);
        benchmark::DoNotOptimize(f);
    }
}
BENCHMARK(BM_Phi);

void BM_Oplus(benchmark::State& state) {
    const PartialKShape s(5, {{3, 1, 1}, {2, 0, 1}, {2, 0, 1}});
    for (auto _ : state) {
        PartialKShape next = oplus(s, 1, 2);
        benchmark::DoNotOptimize(next);
    }
}
BENCHMARK(BM_Oplus);

void BM_Gandhi(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) {
        MultiPoly p = gandhi(k);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_Gandhi)->Arg(6)->Arg(9)->Arg(12);

void BM_GeneralizedDumontFoata(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) {
        MultiPoly p = generalized_dumont_foata(k);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_GeneralizedDumontFoata)->Arg(4)->Arg(5);

void BM_BoxEnumerateIrreducible(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const int side = (k - 1) * (k - 2);
    for (auto _ : state) {
        auto shapes = box_enumerate_irreducible(k, BoxBound{side, side});
        benchmark::DoNotOptimize(shapes);
    }
}
BENCHMARK(BM_BoxEnumerateIrreducible)->Arg(3)->Arg(4);

} // namespace

BENCHMARK_MAIN();
