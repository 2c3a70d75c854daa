#include <benchmark/benchmark.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include <combx/enumerate.hpp>
#include <combx/formulas.hpp>
#include <combx/gentree.hpp>
#include <combx/perm.hpp>
#include <combx/poset.hpp>

using namespace combx;

namespace {

void BM_CountAvoiding(benchmark::State& state) {
    const Poset p = build_comb(CombSpec::even(Family::Beta, static_cast<int>(state.range(0)), 2));
    const PatternSet ps = PatternSet::parse("312");
    for (auto _ : state) {
        auto count = count_avoiding(p, ps);
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_CountAvoiding)->Arg(4)->Arg(5)->Arg(6)->Arg(7);

void BM_CountAvoidingThreaded(benchmark::State& state) {
    const Poset p = build_comb(CombSpec::even(Family::Beta, 7, 2));
    const PatternSet ps = PatternSet::parse("312");
    for (auto _ : state) {
        auto count = count_avoiding(p, ps, static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_CountAvoidingThreaded)->Arg(1)->Arg(2)->Arg(4);

void BM_ExtensionStream(benchmark::State& state) {
    const Poset p = build_comb(CombSpec::even(Family::Alpha, static_cast<int>(state.range(0)), 2));
    for (auto _ : state) {
        ExtensionIterator it(p);
        long long n = 0;
        while (it.next()) ++n;
        benchmark::DoNotOptimize(n);
    }
}
BENCHMARK(BM_ExtensionStream)->Arg(4)->Arg(5)->Arg(6);

void BM_ContainsScan(benchmark::State& state) {
    std::mt19937 rng(7);
    std::vector<int> vals(static_cast<size_t>(state.range(0)));
    std::iota(vals.begin(), vals.end(), 1);
    std::shuffle(vals.begin(), vals.end(), rng);
    const Permutation v(vals);
    const Permutation w = Permutation::parse("132");
    for (auto _ : state) {
        bool hit = contains(v, w);
        benchmark::DoNotOptimize(hit);
    }
}
BENCHMARK(BM_ContainsScan)->Arg(100)->Arg(1000)->Arg(10000);

void BM_SuccessionProfiles(benchmark::State& state) {
    for (auto _ : state) {
        auto profiles = succession_profiles(2, static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(profiles);
    }
}
BENCHMARK(BM_SuccessionProfiles)->Arg(24)->Arg(48)->Arg(96);

void BM_LatticeProfiles(benchmark::State& state) {
    for (auto _ : state) {
        auto profiles = lattice_profiles(2, static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(profiles);
    }
}
BENCHMARK(BM_LatticeProfiles)->Arg(24)->Arg(48)->Arg(96);

void BM_SeriesExpansion(benchmark::State& state) {
    for (auto _ : state) {
        auto gf = gf_231_alpha_t2(static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(gf);
    }
}
BENCHMARK(BM_SeriesExpansion)->Arg(8)->Arg(16)->Arg(32);

void BM_KnuthCount(benchmark::State& state) {
    const int s = static_cast<int>(state.range(0));
    const Poset p = build_comb(CombSpec::even(Family::Beta, s, s));
    for (auto _ : state) {
        auto count = knuth_count(p);
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_KnuthCount)->Arg(4)->Arg(8)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
