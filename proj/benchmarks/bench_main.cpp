#include <benchmark/benchmark.h>

#include "hamc/augment.hpp"
#include "hamc/caterpillar.hpp"
#include "hamc/closed_form.hpp"
#include "hamc/ham_check.hpp"
#include "hamc/oracle.hpp"
#include "hamc/prng.hpp"

using namespace hamc;

namespace {

CaterpillarSpec scale_spec(int heavy_blocks) {
    // interleaves claws, zero runs, and deserted pendants
    std::vector<int> ls;
    Lcg rng(99);
    ls.push_back(rng.next_in_range(2, 6));
    for (int i = 0; i < heavy_blocks; ++i) {
        switch (rng.next_in_range(0, 2)) {
            case 0: ls.push_back(0); break;
            case 1:
                ls.push_back(0);
                ls.push_back(1);
                ls.push_back(0);
                break;
            default: break;
        }
        ls.push_back(rng.next_in_range(2, 6));
    }
    return CaterpillarSpec(ls);
}

void BM_BuildGraph(benchmark::State& state) {
    const CaterpillarSpec spec = scale_spec(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto built = build_graph(spec);
        benchmark::DoNotOptimize(built.first.edge_count());
    }
}
BENCHMARK(BM_BuildGraph)->Arg(8)->Arg(32);

void BM_Construct(benchmark::State& state) {
    const CaterpillarSpec spec = scale_spec(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto plan = construct(spec);
        benchmark::DoNotOptimize(plan->added_edges.size());
    }
    state.SetLabel(std::to_string(spec.total_vertices()) + " vertices");
}
BENCHMARK(BM_Construct)->Arg(8)->Arg(32);

void BM_VerifyCycle(benchmark::State& state) {
    const CaterpillarSpec spec = scale_spec(32);
    auto plan = *construct(spec);
    Graph g = build_graph(spec).first;
    for (const Edge& e : plan.added_edges) g.add_edge(e.u, e.v);
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_cycle(g, plan.witness_cycle));
}
BENCHMARK(BM_VerifyCycle);

void BM_HamiltonianCycleDp(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    g.add_edge(0, n / 2);
    g.add_edge(1, n / 2 + 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(hamiltonian_cycle(g).has_value());
}
BENCHMARK(BM_HamiltonianCycleDp)->Arg(12)->Arg(16)->Arg(20);

void BM_OracleRegular1(benchmark::State& state) {
    Graph g = build_graph(CaterpillarSpec({1, 1, 1, 1})).first;
    for (auto _ : state) {
        auto r = min_cycle_augmentation(g);
        benchmark::DoNotOptimize(r->minimum);
    }
}
BENCHMARK(BM_OracleRegular1);

void BM_OracleStar(benchmark::State& state) {
    Graph g = build_graph(CaterpillarSpec({static_cast<int>(state.range(0))})).first;
    for (auto _ : state) {
        auto r = min_cycle_augmentation(g);
        benchmark::DoNotOptimize(r->minimum);
    }
}
BENCHMARK(BM_OracleStar)->Arg(5)->Arg(7);

void BM_OracleDeserted(benchmark::State& state) {
    Graph g = build_graph(CaterpillarSpec({2, 0, 1, 0, 2})).first;
    for (auto _ : state) {
        auto r = min_cycle_augmentation(g);
        benchmark::DoNotOptimize(r->minimum);
    }
}
BENCHMARK(BM_OracleDeserted);

}  // namespace

BENCHMARK_MAIN();
