#include <benchmark/benchmark.h>

#include "robsel/formulations.hpp"
#include "robsel/milp/solve.hpp"
#include "robsel/samplers.hpp"

using namespace robsel;

namespace {

ProblemInstance sampled(const char* gen, int n, int p, int N, std::uint64_t seed) {
    ShapeParams sp;
    sp.n = n;
    sp.p = p;
    sp.N = N;
    sp.seed = seed;
    return sample_instance(*GeneratorId::parse(gen), sp);
}

void BM_minmax_milp(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    auto inst = sampled("MM-D-U", n, n / 2 + 1, n, 7);
    for (auto _ : state) {
        auto bundle = build_milp(inst);
        auto result = milp::solve_milp(bundle.model);
        benchmark::DoNotOptimize(result.objective);
    }
    state.counters["nodes"] = static_cast<double>(
        milp::solve_milp(build_milp(inst).model).node_count);
}
BENCHMARK(BM_minmax_milp)->Arg(10)->Arg(14)->Arg(18)->Unit(benchmark::kMillisecond);

void BM_lp_relaxation(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    auto inst = sampled("MM-D-U", n, n / 2 + 1, n, 7);
    auto bundle = build_milp(inst);
    for (auto _ : state) {
        auto result = milp::solve_lp(bundle.model);
        benchmark::DoNotOptimize(result.objective);
    }
}
BENCHMARK(BM_lp_relaxation)->Arg(10)->Arg(20)->Arg(30)->Unit(benchmark::kMicrosecond);

void BM_budgeted_enumeration(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    ShapeParams sp;
    sp.n = n;
    sp.p = n / 2;
    sp.gamma = Rational(n / 4);
    sp.seed = 11;
    auto inst = sample_instance(*GeneratorId::parse("MM-B-2"), sp);
    for (auto _ : state) {
        auto [x, v] = solve_minmax_budgeted_enumeration(inst);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_budgeted_enumeration)->Arg(40)->Arg(100)->Arg(400)->Unit(benchmark::kMicrosecond);

} // namespace
