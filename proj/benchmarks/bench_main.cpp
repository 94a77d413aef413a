#include <benchmark/benchmark.h>

#include "ptorsion/group_oracle.hpp"
#include "ptorsion/hall_littlewood.hpp"
#include "ptorsion/identity_suite.hpp"
#include "ptorsion/moments.hpp"
#include "ptorsion/partition.hpp"
#include "ptorsion/rlambda.hpp"

using namespace ptorsion;

namespace {

// c_coeff is memoized: after the first iteration this times lookup plus evaluation.
void BM_CoefficientSweep(benchmark::State& state) {
    const auto lambdas = partitions_of(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        mpq_class acc = 0;
        for (const auto& l : lambdas) {
            for (const auto& mu : subpartitions(l)) acc += c_coeff(l, mu).evaluate(mpq_class(3));
        }
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_CoefficientSweep)->DenseRange(4, 8, 2);

void BM_RlambdaPoly(benchmark::State& state) {
    const Partition l(std::vector<int>(static_cast<std::size_t>(state.range(0)), 2));
    for (auto _ : state) benchmark::DoNotOptimize(rlambda_poly(l, 3));
}
BENCHMARK(BM_RlambdaPoly)->DenseRange(1, 3);

void BM_HallLittlewoodEvaluate(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::vector<UniRat> x;
    for (int i = 0; i < n; ++i) x.emplace_back(mpq_class(i + 2, 3));
    const Partition l = parse_partition("2,1");
    for (auto _ : state) benchmark::DoNotOptimize(hl_evaluate(l, x));
}
BENCHMARK(BM_HallLittlewoodEvaluate)->DenseRange(2, 5);

void BM_EnumerateSubgroups(benchmark::State& state) {
    const PGroup h(2, parse_partition(state.range(0) == 0 ? "2,1,1" : "2,2,1,1"));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_subgroups(h));
}
BENCHMARK(BM_EnumerateSubgroups)->DenseRange(0, 1)->Unit(benchmark::kMillisecond);

void BM_InjectiveHoms(benchmark::State& state) {
    const PGroup h(3, parse_partition("2,1,1"));
    const Partition l = parse_partition("1,1");
    for (auto _ : state) benchmark::DoNotOptimize(count_injective_homs(l, h));
}
BENCHMARK(BM_InjectiveHoms)->Unit(benchmark::kMillisecond);

void BM_Moment(benchmark::State& state) {
    const Partition l = parse_partition("3,2,1");
    for (auto _ : state) benchmark::DoNotOptimize(moment(MomentQuery{l, 5, 2, Flavor::TypeS}));
}
BENCHMARK(BM_Moment);

void BM_DefaultSuite(benchmark::State& state) {
    const auto cases = default_suite();
    SuiteOptions opt;
    opt.threads = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(run_suite(cases, opt));
}
BENCHMARK(BM_DefaultSuite)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

} // namespace

BENCHMARK_MAIN();
