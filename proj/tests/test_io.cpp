#include <set>
#include <sstream>

#include "doctest.h"
#include "xylab/graphs.hpp"
#include "xylab/io.hpp"

using namespace xylab;

TEST_SUITE("graphs") {
    TEST_CASE("Reg3 on 4 vertices is forced to K4") {
        const EdgeList e = random_graph(GraphKind::Reg3, 4, 99);
        CHECK(e.size() == 6);
        std::set<std::pair<int, int>> got(e.begin(), e.end());
        CHECK(got == std::set<std::pair<int, int>>{
                         {0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    }

    TEST_CASE("families are simple, sized, and deterministic") {
        for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
            const EdgeList r3 = random_graph(GraphKind::Reg3, 8, seed);
            CHECK(r3.size() == 12);
            std::vector<int> deg(8, 0);
            std::set<std::pair<int, int>> uniq;
            for (const auto& [u, v] : r3) {
                CHECK(u < v);
                ++deg[u];
                ++deg[v];
                uniq.insert({u, v});
            }
            CHECK(uniq.size() == 12);
            for (int d : deg) CHECK(d == 3);

            const EdgeList rnd = random_graph(GraphKind::Rnd2n, 8, seed);
            CHECK(rnd.size() == 16);
            CHECK(std::set<std::pair<int, int>>(rnd.begin(), rnd.end()).size() == 16);
            CHECK(random_graph(GraphKind::Rnd2n, 8, seed) == rnd);
            CHECK(random_graph(GraphKind::Reg3, 8, seed) == r3);
        }
        CHECK_THROWS_AS(random_graph(GraphKind::Reg3, 5, 1), validation_error);  // odd 3n
    }

    TEST_CASE("edge-list round trip with comments") {
        const EdgeList e = random_graph(GraphKind::Rnd2n, 7, 5);
        std::stringstream ss;
        write_edge_list(ss, e, 7);
        int n = 0;
        const EdgeList back = read_edge_list(ss, n);
        CHECK(back == e);
        CHECK(n == 7);
    }
}

TEST_SUITE("io") {
    TEST_CASE("instance JSON round trip") {
        const ProblemInstance inst =
            embed_sparsest_subgraph(random_graph(GraphKind::Rnd2n, 6, 17), 6, 3);
        const ProblemInstance back = instance_from_json(instance_to_json(inst));
        CHECK(back.n == inst.n);
        CHECK(back.k == inst.k);
        CHECK(back.label == inst.label);
        for (std::uint64_t x = 0; x < 64; ++x) {
            CHECK(back.energy(x) == doctest::Approx(inst.energy(x)).epsilon(1e-12));
        }
    }

    TEST_CASE("malformed instance JSON raises parse/validation errors") {
        CHECK_THROWS_AS(instance_from_json(nlohmann::json{{"n", 2}}), parse_error);
        nlohmann::json bad = {{"n", 2},     {"k", 1},
                              {"const", 0}, {"h", nlohmann::json::array({{{"i", 5}, {"c", 1.0}}})},
                              {"J", nlohmann::json::array()}, {"label", "x"}};
        CHECK_THROWS_AS(instance_from_json(bad), validation_error);
    }

    TEST_CASE("run-record JSON carries config, phases, and summary") {
        const ProblemInstance inst =
            embed_sparsest_subgraph(random_graph(GraphKind::Reg3, 6, 2), 6, 3);
        ExperimentConfig cfg;
        cfg.p = 1;
        cfg.restarts = 1;
        cfg.steps_per_phase = 3;
        const RunRecord r = warm_start_run(inst, cfg);
        const nlohmann::json j = run_record_to_json(r, inst, "2026-01-01T00:00:00Z");
        CHECK(j.at("timestamp") == "2026-01-01T00:00:00Z");
        CHECK(j.at("config").at("mode") == "ma");
        CHECK(j.at("config").at("arm") == "ws");
        CHECK(j.at("instance").at("n") == 6);
        REQUIRE(j.at("restarts").size() == 1);
        CHECK(j.at("restarts")[0].at("pretrain").size() == 4);
        CHECK(j.at("restarts")[0].at("refine").size() == 4);
        CHECK(j.at("summary").at("best_ar").get<double>() == doctest::Approx(r.best_ar));
    }

    TEST_CASE("step and sweep CSV shapes") {
        const ProblemInstance inst =
            embed_sparsest_subgraph(random_graph(GraphKind::Reg3, 6, 2), 6, 3);
        ExperimentConfig cfg;
        cfg.p = 1;
        cfg.restarts = 1;
        cfg.steps_per_phase = 2;
        const RunRecord r = warm_start_run(inst, cfg);
        std::stringstream step;
        write_step_csv(step, {r});
        std::string line;
        std::getline(step, line);
        CHECK(line == "step,arm,ar,succ");
        int rows = 0;
        while (std::getline(step, line)) ++rows;
        CHECK(rows == 6);  // 3 pretrain + 3 refine points

        std::stringstream sweep;
        write_sweep_csv(sweep, {r});
        std::getline(sweep, line);
        CHECK(line == "instance,arm,p,best_ar,best_succ");
        std::getline(sweep, line);
        CHECK(line.rfind("sparsest-subgraph,ma-ws,1,", 0) == 0);
    }
}
