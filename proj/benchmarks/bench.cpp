#include <benchmark/benchmark.h>

#include <hgfam/family.hpp>
#include <hgfam/polytope.hpp>
#include <hgfam/groebner.hpp>
#include <hgfam/semigroup.hpp>
#include <hgfam/verify.hpp>

using namespace hgfam;

static void BM_NormalizedVolumeHat(benchmark::State& state) {
    const IntegerMatrix m = hat_family(static_cast<std::size_t>(state.range(0))).matrix;
    for (auto _ : state) {
        benchmark::DoNotOptimize(normalized_volume(m));
    }
}
BENCHMARK(BM_NormalizedVolumeHat)->DenseRange(4, 12, 2);

static void BM_ToricGenerators(benchmark::State& state) {
    const IntegerMatrix m = hat_family(static_cast<std::size_t>(state.range(0))).matrix;
    for (auto _ : state) {
        benchmark::DoNotOptimize(toric_generators(m));
    }
}
BENCHMARK(BM_ToricGenerators)->DenseRange(2, 8, 2);

static void BM_SemigroupEquality(benchmark::State& state) {
    const FamilyInstance inst = hat_family(static_cast<std::size_t>(state.range(0)));
    const IntegerMatrix base = hat_base_matrix(inst);
    for (auto _ : state) {
        benchmark::DoNotOptimize(semigroups_equal(base, inst.matrix));
    }
}
BENCHMARK(BM_SemigroupEquality)->DenseRange(4, 12, 4);

static void BM_VerifyQuick(benchmark::State& state) {
    const FamilyInstance inst = hat_family(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify(inst, Depth::quick));
    }
}
BENCHMARK(BM_VerifyQuick)->DenseRange(4, 12, 4);

BENCHMARK_MAIN();
