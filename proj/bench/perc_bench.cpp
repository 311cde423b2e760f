// Serial reference kernels against their OpenMP versions.
#include <benchmark/benchmark.h>

#include <omp.h>

#include "perc/harness.hpp"
#include "perc/solver.hpp"

using namespace perc;

namespace {

GameState window_state(int r, int q) {
    auto w = std::make_shared<const Board>(build_lattice_window(2, r, Coord{0, 0}));
    return GameState(w, GameConfig{1, q, Player::Maker});
}

void BM_SolveSerial(benchmark::State& st) {
    const GameState s = window_state(static_cast<int>(st.range(0)), static_cast<int>(st.range(1)));
    for (auto _ : st) benchmark::DoNotOptimize(solve_escape_serial(s).winner);
}

void BM_SolveParallel(benchmark::State& st) {
    const GameState s = window_state(static_cast<int>(st.range(0)), static_cast<int>(st.range(1)));
    for (auto _ : st) benchmark::DoNotOptimize(solve_escape(s).winner);
}

void BM_DualCycleSerial(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(check_dual_cycle(4, st.range(0), 1, false).all_pass());
}

void BM_DualCycleParallel(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(check_dual_cycle(4, st.range(0), 1, true).all_pass());
}

void BM_LehmanCatalogue(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(check_lehman(static_cast<int>(st.range(0)), {}).all_pass());
}

}  // namespace

BENCHMARK(BM_SolveSerial)->Args({2, 1})->Args({2, 2})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SolveParallel)->Args({2, 1})->Args({2, 2})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DualCycleSerial)->Arg(5000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DualCycleParallel)->Arg(5000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LehmanCatalogue)->Arg(6)->Unit(benchmark::kMillisecond);

int main(int argc, char** argv) {
    benchmark::Initialize(&argc, argv);
    benchmark::AddCustomContext("omp_max_threads", std::to_string(omp_get_max_threads()));
    benchmark::RunSpecifiedBenchmarks();
    benchmark::Shutdown();
    return 0;
}
