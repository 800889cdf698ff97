#include <benchmark/benchmark.h>

#include <random>

#include "xylab/circuits.hpp"
#include "xylab/dla.hpp"
#include "xylab/graphs.hpp"

using namespace xylab;

namespace {

void BM_dla_build(benchmark::State& state, Topology topo) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_dla(make_generators(topo, n)).dim);
    }
}
BENCHMARK_CAPTURE(BM_dla_build, path_z, Topology::XY_path_Z)->DenseRange(4, 10, 2);
BENCHMARK_CAPTURE(BM_dla_build, clique, Topology::XY_clique)->DenseRange(3, 6, 1);
BENCHMARK_CAPTURE(BM_dla_build, clique_z, Topology::XY_clique_Z)->DenseRange(3, 5, 1);

void BM_apply_ma_circuit(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Circuit c = build_ma_circuit(n, 4);
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(0.0, 6.28);
    std::vector<double> params(static_cast<std::size_t>(c.param_count));
    for (double& v : params) v = u(rng);
    for (auto _ : state) {
        State s = dicke_state(n, n / 2);
        apply_circuit(c, params, s);
        benchmark::DoNotOptimize(s.amp[0]);
    }
}
BENCHMARK(BM_apply_ma_circuit)->DenseRange(4, 12, 2);

void BM_gradient(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const ProblemInstance inst =
        embed_sparsest_subgraph(random_graph(GraphKind::Rnd2n, n, 3), n, n / 2);
    const std::vector<double> diag = instance_diagonal(inst);
    const Circuit c = build_ma_circuit(n, 2);
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> u(0.0, 6.28);
    std::vector<double> params(static_cast<std::size_t>(c.param_count));
    for (double& v : params) v = u(rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(gradient(c, params, inst, diag));
    }
}
BENCHMARK(BM_gradient)->DenseRange(4, 8, 2);

}  // namespace

BENCHMARK_MAIN();
