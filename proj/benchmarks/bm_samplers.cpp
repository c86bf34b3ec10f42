#include <benchmark/benchmark.h>

#include "robsel/io.hpp"
#include "robsel/samplers.hpp"

using namespace robsel;

namespace {

void BM_sample(benchmark::State& state, const char* gen, bool budgeted, bool delta) {
    ShapeParams sp;
    sp.n = static_cast<int>(state.range(0));
    sp.p = sp.n / 2;
    sp.N = budgeted ? 0 : sp.n;
    if (budgeted) sp.gamma = Rational(5);
    if (delta) sp.delta = sp.p / 2;
    std::uint64_t seed = 0;
    auto id = *GeneratorId::parse(gen);
    for (auto _ : state) {
        sp.seed = ++seed;
        auto inst = sample_instance(id, sp);
        benchmark::DoNotOptimize(inst.n);
    }
}

void BM_sample_mmd2(benchmark::State& state) { BM_sample(state, "MM-D-2", false, false); }
BENCHMARK(BM_sample_mmd2)->Arg(30)->Arg(100);

void BM_sample_rrdb1(benchmark::State& state) { BM_sample(state, "RR-DB-1", true, true); }
BENCHMARK(BM_sample_rrdb1)->Arg(100)->Arg(1000);

void BM_canonical_bytes(benchmark::State& state) {
    ShapeParams sp;
    sp.n = static_cast<int>(state.range(0));
    sp.p = sp.n / 2;
    sp.N = sp.n;
    sp.seed = 3;
    auto inst = sample_instance(*GeneratorId::parse("MM-D-U"), sp);
    for (auto _ : state) {
        auto bytes = canonical_bytes(inst);
        benchmark::DoNotOptimize(bytes.size());
    }
}
BENCHMARK(BM_canonical_bytes)->Arg(30)->Arg(100);

} // namespace
