#include <benchmark/benchmark.h>

#include "qpoker/dominance.hpp"
#include "qpoker/ewl.hpp"
#include "qpoker/octonion.hpp"
#include "qpoker/poker.hpp"
#include "qpoker/quantized.hpp"
#include "qpoker/sampling.hpp"
#include "qpoker/solvers.hpp"

using namespace qp;

namespace {

void bench_quaternion_multiply(benchmark::State& state) {
    quaternion a(0.5, 0.5, 0.5, 0.5), b(0.6, 0.0, 0.8, 0.0);
    for (auto _ : state) {
        a = (a * b).normalized();
        benchmark::DoNotOptimize(a);
    }
}
BENCHMARK(bench_quaternion_multiply);

void bench_octonion_multiply(benchmark::State& state) {
    octonion a(quaternion(0.5, 0.5, 0.5, 0.5), quaternion(0, 0, 0, 0));
    octonion b(quaternion(0.6, 0.0, 0.8, 0.0), quaternion(0, 0, 0, 0));
    for (auto _ : state) {
        octonion c = a * b;
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(bench_octonion_multiply);

void bench_oracle_two_player(benchmark::State& state) {
    rng_stream rng(11);
    std::vector<mat2> ops = {su2(sample_unit_quaternion(rng)), su2(sample_unit_quaternion(rng))};
    for (auto _ : state) {
        auto d = outcome_distribution(2, true, ops);
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(bench_oracle_two_player);

void bench_oracle_three_player(benchmark::State& state) {
    rng_stream rng(12);
    std::vector<mat2> ops = {su2(sample_unit_quaternion(rng)), su2(sample_unit_quaternion(rng)),
                             su2(sample_unit_quaternion(rng))};
    for (auto _ : state) {
        auto d = outcome_distribution(3, true, ops);
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(bench_oracle_three_player);

void bench_fast_path(benchmark::State& state) {
    rng_stream rng(13);
    quaternion p = sample_unit_quaternion(rng), q = sample_unit_quaternion(rng);
    auto game = builtin_game(builtin::simplified_poker_reduced);
    auto cal = calibrate_assignment(2);
    for (auto _ : state) {
        auto r = quaternion_payoff(game, p, q, cal.assignment);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(bench_fast_path);

void bench_haar_sampling(benchmark::State& state) {
    rng_stream rng(14);
    for (auto _ : state) {
        quaternion q = sample_unit_quaternion(rng);
        benchmark::DoNotOptimize(q);
    }
}
BENCHMARK(bench_haar_sampling);

void bench_build_simplified(benchmark::State& state) {
    poker_spec spec(poker_variant::simplified, rational(15), rational(10));
    for (auto _ : state) {
        auto b = build_poker(spec);
        benchmark::DoNotOptimize(b);
    }
}
BENCHMARK(bench_build_simplified);

void bench_build_three_player(benchmark::State& state) {
    poker_spec spec(poker_variant::three_player, rational(16), rational(64));
    for (auto _ : state) {
        auto b = build_poker(spec);
        benchmark::DoNotOptimize(b);
    }
}
BENCHMARK(bench_build_three_player)->Unit(benchmark::kMillisecond)->Iterations(3);

}  // namespace

BENCHMARK_MAIN();
