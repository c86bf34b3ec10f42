#include <benchmark/benchmark.h>

#include "robsel/evaluate.hpp"
#include "robsel/samplers.hpp"

using namespace robsel;

namespace {

void BM_evaluate_minmax_discrete(benchmark::State& state) {
    ShapeParams sp;
    sp.n = static_cast<int>(state.range(0));
    sp.p = sp.n / 2;
    sp.N = sp.n;
    sp.seed = 5;
    auto inst = sample_instance(*GeneratorId::parse("MM-D-1"), sp);
    std::vector<int> items;
    for (int i = 0; i < sp.p; ++i) items.push_back(i);
    auto x = SelectionSolution::from_support(sp.n, items);
    for (auto _ : state) {
        auto rep = evaluate_robust(x, inst);
        benchmark::DoNotOptimize(rep.objective);
    }
}
BENCHMARK(BM_evaluate_minmax_discrete)->Arg(30)->Arg(100);

void BM_evaluate_recoverable_db(benchmark::State& state) {
    ShapeParams sp;
    sp.n = static_cast<int>(state.range(0));
    sp.p = sp.n / 2;
    sp.gamma = Rational(4);
    sp.delta = sp.p / 2;
    sp.seed = 5;
    auto inst = sample_instance(*GeneratorId::parse("RR-DB-2"), sp);
    std::vector<int> items;
    for (int i = 0; i < sp.p; ++i) items.push_back(i);
    auto x = SelectionSolution::from_support(sp.n, items);
    for (auto _ : state) {
        auto rep = evaluate_robust(x, inst);
        benchmark::DoNotOptimize(rep.objective);
    }
}
BENCHMARK(BM_evaluate_recoverable_db)->Arg(10)->Arg(20);

void BM_brute_force(benchmark::State& state) {
    ShapeParams sp;
    sp.n = static_cast<int>(state.range(0));
    sp.p = sp.n / 2;
    sp.N = 3;
    sp.seed = 5;
    auto inst = sample_instance(*GeneratorId::parse("MM-D-U"), sp);
    for (auto _ : state) {
        auto [x, v] = brute_force_robust_opt(inst);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_brute_force)->Arg(8)->Arg(12);

} // namespace
