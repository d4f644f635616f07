// Serial reference vs OpenMP strata summation.

#include <benchmark/benchmark.h>

#include <divzeta/graph.hpp>
#include <divzeta/strata.hpp>

namespace
{

using namespace divzeta;

DualGraph theta_graph()
{
    std::vector<Vertex> vs = {{"a", 0, projective_line_model("a"), 0}, {"b", 0, projective_line_model("b"), 0}};
    return DualGraph(std::move(vs), {{0, 1}, {0, 1}, {0, 1}}, {});
}

DualGraph banana_graph()
{
    std::vector<Vertex> vs = {{"u", 1, symbolic_model("u", 1), 0}, {"w", 1, symbolic_model("w", 1), 0}};
    return DualGraph(std::move(vs), {{0, 1}, {0, 1}}, {0});
}

template <RingElem (*Sum)(const StrataEvaluator &, const std::vector<StablePair> &)>
void run_sum(benchmark::State &state, const DualGraph &g)
{
    const auto d = static_cast<unsigned>(state.range(0));
    const StrataEvaluator ev(g, d);
    const auto pairs = enumerate_stable_pairs(g, d);
    for (auto _ : state) {
        benchmark::DoNotOptimize(Sum(ev, pairs));
    }
    state.counters["pairs"] = static_cast<double>(pairs.size());
}

void BM_theta_serial(benchmark::State &s) { run_sum<sum_strata_serial>(s, theta_graph()); }
void BM_theta_openmp(benchmark::State &s) { run_sum<sum_strata>(s, theta_graph()); }
void BM_banana_serial(benchmark::State &s) { run_sum<sum_strata_serial>(s, banana_graph()); }
void BM_banana_openmp(benchmark::State &s) { run_sum<sum_strata>(s, banana_graph()); }

void BM_enumerate(benchmark::State &state)
{
    const DualGraph g = theta_graph();
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_stable_pairs(g, static_cast<unsigned>(state.range(0))));
    }
}

} // namespace

BENCHMARK(BM_theta_serial)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_theta_openmp)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_banana_serial)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_banana_openmp)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_enumerate)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
