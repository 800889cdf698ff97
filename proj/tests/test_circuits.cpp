#include <random>

#include "doctest.h"
#include "xylab/circuits.hpp"
#include "xylab/graphs.hpp"

using namespace xylab;

namespace {

std::vector<double> random_params(std::mt19937_64& rng, int count) {
    std::uniform_real_distribution<double> u(0.0, 2.0 * 3.14159265358979);
    std::vector<double> p(static_cast<std::size_t>(count));
    for (double& v : p) v = u(rng);
    return p;
}

ProblemInstance random_sparsest(std::uint64_t seed, int n, int k) {
    // Reg3 is feasible for every even n >= 4 (Rnd2n needs 2n <= C(n,2)).
    return embed_sparsest_subgraph(random_graph(GraphKind::Reg3, n, seed), n, k);
}

}  // namespace

TEST_SUITE("circuits") {
    TEST_CASE("parameter counts") {
        for (int n : {4, 6, 8}) {
            for (int p : {1, 3}) {
                CHECK(build_ma_circuit(n, p).param_count == (n * n + 3 * n) * p / 2);
                CHECK(build_ws_circuit(n, p).param_count == 2 * n * p);
                const ProblemInstance inst = random_sparsest(5, n, n / 2);
                const SaCircuits sa = build_sa_circuits(n, p, inst);
                CHECK(sa.ws.param_count == 2 * p);
                CHECK(sa.full.param_count == 3 * p);
            }
        }
        CHECK_THROWS_AS(build_ma_circuit(3, 1), validation_error);  // odd n
    }

    TEST_CASE("MA circuits preserve the Dicke sector") {
        std::mt19937_64 rng(7);
        for (int trial = 0; trial < 10; ++trial) {
            const int p = 1 + static_cast<int>(rng() % 4);
            const Circuit c = build_ma_circuit(6, p);
            State s = dicke_state(6, 3);
            apply_circuit(c, random_params(rng, c.param_count), s);
            CHECK(s.norm() == doctest::Approx(1.0).epsilon(1e-10));
            CHECK(s.out_of_sector_mass(3) < 1e-10);
        }
    }

    TEST_CASE("transfer keeps the loss exactly continuous") {
        std::mt19937_64 rng(11);
        const ProblemInstance inst = random_sparsest(3, 6, 3);
        const std::vector<double> diag = instance_diagonal(inst);
        for (int p : {1, 2, 3}) {
            const Circuit ws = build_ws_circuit(6, p);
            const Circuit full = build_ma_circuit(6, p);
            const std::vector<double> wsp = random_params(rng, ws.param_count);
            const std::vector<double> fp = transfer_params(ws, full, wsp);
            CHECK(evaluate_loss(full, fp, inst, diag) ==
                  doctest::Approx(evaluate_loss(ws, wsp, inst, diag)).epsilon(1e-12));

            const SaCircuits sa = build_sa_circuits(6, p, inst);
            const std::vector<double> sp = random_params(rng, sa.ws.param_count);
            const std::vector<double> sf = transfer_params(sa.ws, sa.full, sp);
            CHECK(evaluate_loss(sa.full, sf, inst, diag) ==
                  doctest::Approx(evaluate_loss(sa.ws, sp, inst, diag)).epsilon(1e-12));
        }
    }

    TEST_CASE("transfer rejects structurally incompatible circuits") {
        const Circuit ws6 = build_ws_circuit(6, 2);
        const Circuit ma4 = build_ma_circuit(4, 2);
        CHECK_THROWS_AS(transfer_params(ws6, ma4, std::vector<double>(ws6.param_count, 0.1)),
                        validation_error);
    }

    TEST_CASE("parameter-shift gradient matches finite differences") {
        std::mt19937_64 rng(13);
        for (int trial = 0; trial < 8; ++trial) {
            const int n = 6;
            const ProblemInstance inst = random_sparsest(50 + trial, n, 3);
            const std::vector<double> diag = instance_diagonal(inst);
            Circuit c;
            switch (trial % 3) {
                case 0: c = build_ma_circuit(n, 1 + trial / 3); break;
                case 1: c = build_ws_circuit(n, 1 + trial / 3); break;
                default: c = build_sa_circuits(n, 1 + trial / 3, inst).full; break;
            }
            const std::vector<double> params = random_params(rng, c.param_count);
            const std::vector<double> g = gradient(c, params, inst, diag);
            const std::vector<double> fd = gradient_fd(c, params, inst, diag);
            double scale = 1.0;
            for (double v : fd) scale = std::max(scale, std::abs(v));
            for (std::size_t i = 0; i < g.size(); ++i) {
                CHECK(std::abs(g[i] - fd[i]) / scale < 1e-6);
            }
        }
    }

    TEST_CASE("an identity circuit leaves the Dicke expectation unchanged") {
        const ProblemInstance inst = random_sparsest(9, 6, 3);
        const std::vector<double> diag = instance_diagonal(inst);
        const Circuit c = build_ma_circuit(6, 2);
        const double loss = evaluate_loss(c, std::vector<double>(c.param_count, 0.0), inst, diag);
        const State s = dicke_state(6, 3);
        CHECK(loss == doctest::Approx(expectation(s, diag)).epsilon(1e-12));
    }

    TEST_CASE("graph partition zeroes the SA warm-start phase") {
        const EdgeList edges = random_graph(GraphKind::Reg3, 6, 21);
        const ProblemInstance inst = embed_graph_partition(edges, 6);
        const SaCircuits sa = build_sa_circuits(6, 2, inst);
        CHECK(sa.ws_phase_vanishes);
        for (const Gate& g : sa.ws.gates) CHECK(g.kind == GateKind::XY);
    }
}
