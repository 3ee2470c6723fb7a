// Microbenchmarks comparing the parallel kernels against their serial
// references, plus truth-table scaling.
#include <benchmark/benchmark.h>

#include <cstddef>

#include "qobdd/complex_linalg.hpp"
#include "qobdd/evaluator.hpp"
#include "qobdd/program.hpp"

namespace {

using namespace qobdd;

void bm_mat_mul_serial(benchmark::State& state) {
    const std::size_t dim = static_cast<std::size_t>(state.range(0));
    ComplexMatrix a = random_unitary(dim, 1), b = random_unitary(dim, 2);
    for (auto _ : state) benchmark::DoNotOptimize(serial::mat_mul(a, b));
    state.SetComplexityN(state.range(0));
}

void bm_mat_mul_parallel(benchmark::State& state) {
    const std::size_t dim = static_cast<std::size_t>(state.range(0));
    ComplexMatrix a = random_unitary(dim, 1), b = random_unitary(dim, 2);
    for (auto _ : state) benchmark::DoNotOptimize(mat_mul(a, b));
    state.SetComplexityN(state.range(0));
}

void bm_tensor_serial(benchmark::State& state) {
    const std::size_t dim = static_cast<std::size_t>(state.range(0));
    ComplexMatrix a = random_unitary(dim, 3), b = random_unitary(dim, 4);
    for (auto _ : state) benchmark::DoNotOptimize(serial::tensor_product(a, b));
}

void bm_tensor_parallel(benchmark::State& state) {
    const std::size_t dim = static_cast<std::size_t>(state.range(0));
    ComplexMatrix a = random_unitary(dim, 3), b = random_unitary(dim, 4);
    for (auto _ : state) benchmark::DoNotOptimize(tensor_product(a, b));
}

void bm_apply_serial(benchmark::State& state) {
    const std::size_t dim = static_cast<std::size_t>(state.range(0));
    ComplexMatrix m = random_unitary(dim, 5);
    StateVector v = StateVector::basis(dim, 0);
    for (auto _ : state) benchmark::DoNotOptimize(serial::apply(m, v));
}

void bm_apply_parallel(benchmark::State& state) {
    const std::size_t dim = static_cast<std::size_t>(state.range(0));
    ComplexMatrix m = random_unitary(dim, 5);
    StateVector v = StateVector::basis(dim, 0);
    for (auto _ : state) benchmark::DoNotOptimize(apply(m, v));
}

void bm_truth_map(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    KQobddProgram p = build_random_program(2, 2, n, 7, {0});
    for (auto _ : state) benchmark::DoNotOptimize(truth_map(p));
    state.SetComplexityN(state.range(0));
}

BENCHMARK(bm_mat_mul_serial)->Arg(16)->Arg(64)->Arg(128)->Arg(256);
BENCHMARK(bm_mat_mul_parallel)->Arg(16)->Arg(64)->Arg(128)->Arg(256);
BENCHMARK(bm_tensor_serial)->Arg(8)->Arg(16)->Arg(32)->Arg(64);
BENCHMARK(bm_tensor_parallel)->Arg(8)->Arg(16)->Arg(32)->Arg(64);
BENCHMARK(bm_apply_serial)->Arg(64)->Arg(256)->Arg(512);
BENCHMARK(bm_apply_parallel)->Arg(64)->Arg(256)->Arg(512);
BENCHMARK(bm_truth_map)->Arg(6)->Arg(8)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
