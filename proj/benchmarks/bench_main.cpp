#include <benchmark/benchmark.h>

#include "ohba/bounds.hpp"
#include "ohba/choosability.hpp"
#include "ohba/coloring.hpp"
#include "ohba/constructions.hpp"

using namespace ohba;

namespace {

void BM_enumerate_ranges_wx(benchmark::State& state) {
    const ConstructionInstance inst = construct_thm4(1, 2, 96);
    const GenericGraph wx = induced_wx(inst.graph);
    const ListAssignment L = restrict_wx(inst.graph, inst.lists);
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_ranges(wx, L).count());
    }
}
BENCHMARK(BM_enumerate_ranges_wx);

void BM_fast_path_thm4(benchmark::State& state) {
    const ConstructionInstance inst = construct_thm4(0, 2, 9);
    for (auto _ : state) {
        benchmark::DoNotOptimize(is_colorable_join_fast(inst.graph, inst.lists).colorable);
    }
}
BENCHMARK(BM_fast_path_thm4);

void BM_fast_path_thm4_large(benchmark::State& state) {
    const ConstructionInstance inst = construct_thm4(1, 2, 96);
    for (auto _ : state) {
        benchmark::DoNotOptimize(is_colorable_join_fast(inst.graph, inst.lists).colorable);
    }
}
BENCHMARK(BM_fast_path_thm4_large);

void BM_generic_backtracking_thm4(benchmark::State& state) {
    const ConstructionInstance inst = construct_thm4(0, 2, 9);
    for (auto _ : state) {
        benchmark::DoNotOptimize(find_proper_coloring(inst.graph, inst.lists).has_value());
    }
}
BENCHMARK(BM_generic_backtracking_thm4);

void BM_critical_b_1_2_3(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(critical_b(1, 2, 3, 20).value);
    }
}
BENCHMARK(BM_critical_b_1_2_3);

void BM_deficiency_2_2_8(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(deficiency(2, 2, 8));
    }
}
BENCHMARK(BM_deficiency_2_2_8);

void BM_thm4_threshold(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(bounds::thm4_threshold(2, 3));
    }
}
BENCHMARK(BM_thm4_threshold);

void BM_int_root_floor(benchmark::State& state) {
    const bounds::Int n = 987654321;
    for (auto _ : state) {
        benchmark::DoNotOptimize(bounds::int_root_floor(n, 4));
    }
}
BENCHMARK(BM_int_root_floor);

} // namespace

BENCHMARK_MAIN();
