#include <benchmark/benchmark.h>

#include <random>

#include "semedge/constraints.hpp"
#include "semedge/intervene.hpp"
#include "semedge/random.hpp"

using namespace semedge;

namespace {

SemParameters make_instance(int n, int ndir, int nbi, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Admg g = random_admg(n, ndir, nbi, rng);
    return random_params(g, rng);
}

Admg verma() {
    return Admg({"1", "2", "3", "4"},
                {{"1", "2"}, {"2", "3"}, {"3", "4"}, {"1", "3"}},
                {{"2", "4"}});
}

}  // namespace

static void BM_CovarianceFromParams(benchmark::State& state) {
    SemParameters p = make_instance(int(state.range(0)), int(state.range(0)) * 2,
                                    int(state.range(0)) / 2, 17);
    for (auto _ : state) benchmark::DoNotOptimize(covariance_from_params(p));
}
BENCHMARK(BM_CovarianceFromParams)->Arg(6)->Arg(12)->Arg(24);

static void BM_EnumerateTreks(benchmark::State& state) {
    SemParameters p = make_instance(int(state.range(0)), int(state.range(0)) * 2,
                                    int(state.range(0)) / 2, 17);
    for (auto _ : state) benchmark::DoNotOptimize(covariance_via_treks(p));
}
BENCHMARK(BM_EnumerateTreks)->Arg(6)->Arg(8);

static void BM_DistrictAndBlanket(benchmark::State& state) {
    std::mt19937_64 rng(23);
    Admg g = random_admg(int(state.range(0)), int(state.range(0)) * 2,
                         int(state.range(0)), rng);
    for (auto _ : state)
        for (const auto& v : g.vertices()) {
            benchmark::DoNotOptimize(g.district(v));
            benchmark::DoNotOptimize(g.markov_blanket(v));
        }
}
BENCHMARK(BM_DistrictAndBlanket)->Arg(8)->Arg(16)->Arg(32);

static void BM_RemoveDirected(benchmark::State& state) {
    SemParameters p = make_instance(int(state.range(0)), int(state.range(0)) * 2, 2, 31);
    CovMatrix s = covariance_from_params(p);
    // pick the first removable edge
    DirEdge edge;
    bool found = false;
    for (const auto& e : p.graph.directed()) {
        if (check_remove_directed(p.graph, e.first, e.second).ok()) {
            edge = e;
            found = true;
            break;
        }
    }
    if (!found) {
        state.SkipWithError("no removable edge in this instance");
        return;
    }
    for (auto _ : state)
        benchmark::DoNotOptimize(remove_directed(s, p.graph, edge.first, edge.second));
}
BENCHMARK(BM_RemoveDirected)->Arg(6)->Arg(12)->Arg(24);

static void BM_PlanRemovals(benchmark::State& state) {
    Admg g = verma();
    for (auto _ : state) benchmark::DoNotOptimize(plan_removals(g, RemovalTarget::directed_only));
}
BENCHMARK(BM_PlanRemovals);

static void BM_DeriveConstraints(benchmark::State& state) {
    Admg g = verma();
    RemovalPlan plan = plan_removals(g, RemovalTarget::directed_only);
    for (auto _ : state) benchmark::DoNotOptimize(derive_constraints(g, plan));
}
BENCHMARK(BM_DeriveConstraints);

BENCHMARK_MAIN();
