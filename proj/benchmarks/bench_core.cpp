#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "sea/catalog.hpp"
#include "sea/invariants.hpp"
#include "sea/transvectant.hpp"

namespace {

sea::BinaryForm random_form(int d, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> dist(-10, 10);
    std::vector<sea::Scalar> c;
    for (int i = 0; i <= d; ++i) c.emplace_back(dist(rng));
    c.front() = 1;
    c.back() = 1;
    return sea::BinaryForm::from_ascending(std::move(c));
}

void BM_Transvectant(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    const auto f = random_form(d, 1);
    const auto g = random_form(d, 2);
    for (auto _ : state) benchmark::DoNotOptimize(sea::transvect(f, g, d / 2));
}
BENCHMARK(BM_Transvectant)->Arg(6)->Arg(10)->Arg(16)->Arg(22);

void BM_SexticInvariants(benchmark::State& state) {
    const auto f = random_form(6, 3);
    for (auto _ : state) benchmark::DoNotOptimize(sea::sextic_invariants(f));
}
BENCHMARK(BM_SexticInvariants);

void BM_DecimicInvariants(benchmark::State& state) {
    const auto f = random_form(10, 4);
    for (auto _ : state) benchmark::DoNotOptimize(sea::decimic_invariants(f));
}
BENCHMARK(BM_DecimicInvariants);

void BM_GeneralInvariants(benchmark::State& state) {
    const auto f = random_form(static_cast<int>(state.range(0)), 5);
    for (auto _ : state) benchmark::DoNotOptimize(sea::general_invariants(f));
}
BENCHMARK(BM_GeneralInvariants)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_VerifyCatalog(benchmark::State& state) {
    const auto cat = sea::Catalog::embedded();
    for (auto _ : state) benchmark::DoNotOptimize(cat.verify_all());
}
BENCHMARK(BM_VerifyCatalog)->Unit(benchmark::kMillisecond);

void BM_Inclusions(benchmark::State& state) {
    const auto cat = sea::Catalog::embedded();
    for (auto _ : state) benchmark::DoNotOptimize(cat.inclusions(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Inclusions)->Arg(9)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
