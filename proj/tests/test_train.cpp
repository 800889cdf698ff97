#include <cmath>

#include "doctest.h"
#include "xylab/graphs.hpp"
#include "xylab/io.hpp"
#include "xylab/train.hpp"
#include "xylab/warmstart.hpp"

using namespace xylab;

TEST_SUITE("train") {
    TEST_CASE("Adam minimizes a quadratic") {
        auto f = [](const std::vector<double>& p) {
            return (p[0] - 3.0) * (p[0] - 3.0) + 2.0 * (p[1] + 1.0) * (p[1] + 1.0);
        };
        auto g = [](const std::vector<double>& p) {
            return std::vector<double>{2.0 * (p[0] - 3.0), 4.0 * (p[1] + 1.0)};
        };
        AdamOptions opt;
        opt.steps = 400;
        opt.lr = 0.05;
        const TrainResult r = adam_optimize_fn(f, g, {0.0, 0.0}, opt);
        CHECK(r.params[0] == doctest::Approx(3.0).epsilon(1e-3));
        CHECK(r.params[1] == doctest::Approx(-1.0).epsilon(1e-3));
        REQUIRE(r.trace.size() == 401);
        CHECK(r.trace.front().step == 0);
        CHECK(r.trace.back().loss < 1e-4);
    }

    TEST_CASE("zero steps records only the initial evaluation") {
        auto f = [](const std::vector<double>& p) { return p[0] * p[0]; };
        auto g = [](const std::vector<double>& p) { return std::vector<double>{2.0 * p[0]}; };
        AdamOptions opt;
        opt.steps = 0;
        const TrainResult r = adam_optimize_fn(f, g, {2.0}, opt);
        REQUIRE(r.trace.size() == 1);
        CHECK(r.params[0] == 2.0);
    }

    TEST_CASE("non-finite loss aborts training") {
        auto f = [](const std::vector<double>&) { return std::nan(""); };
        auto g = [](const std::vector<double>& p) { return std::vector<double>(p.size(), 0.0); };
        AdamOptions opt;
        opt.steps = 1;
        CHECK_THROWS_AS(adam_optimize_fn(f, g, {0.0}, opt), std::runtime_error);
    }
}

TEST_SUITE("warmstart") {
    TEST_CASE("seed derivation separates restarts and arms") {
        const std::uint64_t a = derive_seed(1, 0, "ma-ws");
        CHECK(a == derive_seed(1, 0, "ma-ws"));
        CHECK(a != derive_seed(1, 1, "ma-ws"));
        CHECK(a != derive_seed(1, 0, "ma-rnd"));
        CHECK(a != derive_seed(2, 0, "ma-ws"));
    }

    TEST_CASE("metrics: AR affine in energy, success from the argmin set") {
        const ProblemInstance inst =
            embed_sparsest_subgraph(random_graph(GraphKind::Rnd2n, 6, 4), 6, 3);
        const SpectrumBounds b = exact_spectrum_bounds(inst);
        const std::vector<double> diag = instance_diagonal(inst);
        const State s = dicke_state(6, 3);
        const Metrics m = metrics(s, diag, b);
        CHECK(m.ar == doctest::Approx((expectation(s, diag) - b.e_max) / (b.e_min - b.e_max)));
        double succ = 0.0;
        for (std::uint64_t x : b.argmin) succ += std::norm(s.amp[x]);
        CHECK(m.succ == doctest::Approx(succ));
        CHECK(m.ar >= 0.0);
        CHECK(m.ar <= 1.0);
    }

    TEST_CASE("warm-start runs are deterministic and transfer-continuous") {
        const ProblemInstance inst =
            embed_sparsest_subgraph(random_graph(GraphKind::Rnd2n, 6, 8), 6, 3);
        ExperimentConfig cfg;
        cfg.p = 2;
        cfg.restarts = 2;
        cfg.steps_per_phase = 10;
        cfg.seed = 5;
        const RunRecord a = warm_start_run(inst, cfg);
        const RunRecord b = warm_start_run(inst, cfg);
        CHECK(run_record_to_json(a, inst, "T").dump() == run_record_to_json(b, inst, "T").dump());
        for (const RestartTrace& rt : a.restarts) {
            CHECK(rt.transfer_gap < 1e-9);
            REQUIRE(rt.pretrain.size() == 11);
            REQUIRE(rt.refine.size() == 11);
            // Refine starts exactly where pretrain ended (transfer continuity
            // visible in the recorded losses too).
            CHECK(rt.refine.front().loss ==
                  doctest::Approx(rt.pretrain.back().loss).epsilon(1e-12));
        }
        // best-of-restarts summary picks the lowest final loss.
        const RestartTrace& best =
            a.restarts[0].final_loss <= a.restarts[1].final_loss ? a.restarts[0] : a.restarts[1];
        CHECK(a.best_ar == best.final_ar);
        CHECK(a.best_succ == best.final_succ);
    }

    TEST_CASE("random arm skips pretraining") {
        const ProblemInstance inst =
            embed_sparsest_subgraph(random_graph(GraphKind::Rnd2n, 6, 8), 6, 3);
        ExperimentConfig cfg;
        cfg.p = 1;
        cfg.restarts = 1;
        cfg.steps_per_phase = 5;
        cfg.warm_start = false;
        const RunRecord r = warm_start_run(inst, cfg);
        CHECK(r.restarts[0].pretrain.empty());
        CHECK(r.restarts[0].refine.size() == 6);
        CHECK(r.restarts[0].transfer_gap == 0.0);
    }
}
