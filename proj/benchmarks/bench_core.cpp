#include <benchmark/benchmark.h>

#include "qlt/verify.hpp"

using namespace qlt;

namespace {

QRacahParams<Rat> rational_params(int d) {
    return validate_params(Rat(2), Rat(3), Rat(5), Rat(7), d);
}

QRacahParams<Fp> prime_params(int d) {
    return sample_params(Field::prime(1000003), d, 7);
}

void BM_rat_matmul(benchmark::State& state) {
    const auto r = build_triple(rational_params(static_cast<int>(state.range(0))), BasisChoice::first);
    for (auto _ : state) {
        auto prod = r.C * r.C;
        benchmark::DoNotOptimize(prod);
    }
}
BENCHMARK(BM_rat_matmul)->Arg(4)->Arg(6);

void BM_fp_matmul(benchmark::State& state) {
    const auto r = build_triple(prime_params(static_cast<int>(state.range(0))), BasisChoice::first);
    for (auto _ : state) {
        auto prod = r.C * r.C;
        benchmark::DoNotOptimize(prod);
    }
}
BENCHMARK(BM_fp_matmul)->Arg(6)->Arg(10);

void BM_build_triple_rational(benchmark::State& state) {
    const auto params = rational_params(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto r = build_triple(params, BasisChoice::first);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_build_triple_rational)->Arg(2)->Arg(6);

void BM_build_triple_fp(benchmark::State& state) {
    const auto params = prime_params(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto r = build_triple(params, BasisChoice::first);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_build_triple_fp)->Arg(6)->Arg(10);

void BM_run_all_rational(benchmark::State& state) {
    const auto r = build_triple(rational_params(static_cast<int>(state.range(0))), BasisChoice::first);
    for (auto _ : state) {
        auto rep = run_all(r);
        benchmark::DoNotOptimize(rep);
    }
}
BENCHMARK(BM_run_all_rational)->Arg(2)->Arg(4);

void BM_run_all_fp(benchmark::State& state) {
    const auto r = build_triple(prime_params(static_cast<int>(state.range(0))), BasisChoice::first);
    for (auto _ : state) {
        auto rep = run_all(r);
        benchmark::DoNotOptimize(rep);
    }
}
BENCHMARK(BM_run_all_fp)->Arg(6)->Arg(10);

void BM_sample_params(benchmark::State& state) {
    const Field field = Field::prime(1000003);
    std::uint64_t seed = 0;
    for (auto _ : state) {
        auto params = sample_params(field, 6, seed++);
        benchmark::DoNotOptimize(params);
    }
}
BENCHMARK(BM_sample_params);

} // namespace

int main(int argc, char** argv) {
    benchmark::Initialize(&argc, argv);
    if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
    benchmark::RunSpecifiedBenchmarks();
    benchmark::Shutdown();
    return 0;
}
