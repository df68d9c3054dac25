#include "asph/classifier.hpp"
#include "asph/coset_enumerator.hpp"
#include "asph/lifted.hpp"
#include "asph/star_graph.hpp"

#include <benchmark/benchmark.h>

using namespace asph;

namespace {

void BM_Order55(benchmark::State& state)
{
    Presentation p = lift(LengthFourInstance::cyclic(5, 2, 1, 2, -1).presentation());
    for (auto _ : state) benchmark::DoNotOptimize(group_order(p));
}
BENCHMARK(BM_Order55);

void BM_CyclicStrategies(benchmark::State& state)
{
    EnumerationOptions o;
    o.strategy = state.range(0) ? Strategy::Felsch : Strategy::HLT;
    Presentation p = lift(LengthFourInstance::cyclic(5, 2, 1, 4, 1).presentation());
    for (auto _ : state) benchmark::DoNotOptimize(group_order(p, o));
}
BENCHMARK(BM_CyclicStrategies)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Z8OverCoefficients(benchmark::State& state)
{
    RelativePresentation p = LengthFourInstance::cyclic(8, 2, 1, 2, -1).presentation();
    CoefficientOracle oracle(p.coeff);
    for (auto _ : state) benchmark::DoNotOptimize(lifted_group_order(p, oracle));
}
BENCHMARK(BM_Z8OverCoefficients)->Unit(benchmark::kMillisecond)->Iterations(1);

void BM_MinCycle(benchmark::State& state)
{
    const long long n = state.range(0);
    CoefficientOracle oracle(CoefficientGroup::cyclic(n, "t"));
    StarGraph sg = build_star_graph(LengthFourInstance::cyclic(n, 2, 1, 5, -4).presentation(), &oracle);
    WeightFunction theta = WeightFunction::constant(sg, Rational(1, 3));
    for (auto _ : state) benchmark::DoNotOptimize(min_admissible_cycle_weight(sg, theta, oracle));
}
BENCHMARK(BM_MinCycle)->Arg(6)->Arg(24)->Arg(96);

void BM_Classify(benchmark::State& state)
{
    LengthFourInstance inst = LengthFourInstance::cyclic(6, 3, 1, 3, -1);
    for (auto _ : state) benchmark::DoNotOptimize(classify(inst));
}
BENCHMARK(BM_Classify);

}  // namespace
BENCHMARK_MAIN();
