#include <random>

#include <benchmark/benchmark.h>

#include "fuzzdp/instances.hpp"
#include "fuzzdp/parallel.hpp"

using namespace fuzzdp;
namespace in = fuzzdp::instances;

namespace {

std::vector<FuzzySet> family(std::size_t n) {
    std::mt19937_64 rng(1);
    const auto g = in::share(AlphaGrid::regular(2048));
    std::vector<FuzzySet> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(in::random_step(rng, g, 4));
    return out;
}

std::vector<FuzzySet> spikes() {
    const auto g = in::share(AlphaGrid::graded(4096));
    std::vector<FuzzySet> out;
    for (unsigned k = 1; k <= 20; ++k) out.push_back(in::spike(g, k));
    return out;
}

void BM_DistanceMatrix(benchmark::State& s) {
    const auto fam = family(static_cast<std::size_t>(s.range(0)));
    for (auto _ : s) benchmark::DoNotOptimize(par::distance_matrix(fam, PNorm(1)));
}

void BM_DistanceMatrixSerial(benchmark::State& s) {
    const auto fam = family(static_cast<std::size_t>(s.range(0)));
    for (auto _ : s) benchmark::DoNotOptimize(par::distance_matrix_serial(fam, PNorm(1)));
}

void BM_ModulusTable(benchmark::State& s) {
    const auto fam = spikes();
    const auto hs = default_h_grid(fam.front().grid());
    for (auto _ : s) benchmark::DoNotOptimize(par::modulus_table(fam, hs, PNorm(1)));
}

void BM_ModulusTableSerial(benchmark::State& s) {
    const auto fam = spikes();
    const auto hs = default_h_grid(fam.front().grid());
    for (auto _ : s) benchmark::DoNotOptimize(par::modulus_table_serial(fam, hs, PNorm(1)));
}

void BM_ResidualTable(benchmark::State& s) {
    const auto fam = family(64);
    std::vector<double> rs;
    for (int k = 1; k <= 40; ++k) rs.push_back(0.15 * k);
    for (auto _ : s) benchmark::DoNotOptimize(par::residual_table(fam, rs, PNorm(2)));
}

void BM_ResidualTableSerial(benchmark::State& s) {
    const auto fam = family(64);
    std::vector<double> rs;
    for (int k = 1; k <= 40; ++k) rs.push_back(0.15 * k);
    for (auto _ : s) benchmark::DoNotOptimize(par::residual_table_serial(fam, rs, PNorm(2)));
}

}  // namespace

BENCHMARK(BM_DistanceMatrix)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_DistanceMatrixSerial)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ModulusTable)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ModulusTableSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ResidualTable)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ResidualTableSerial)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
