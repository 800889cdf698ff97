#include "xylab/io.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <ostream>

#include "xylab/errors.hpp"

namespace xylab {

using nlohmann::json;

nlohmann::json instance_to_json(const ProblemInstance& inst) {
    json h = json::array();
    for (int i = 0; i < inst.n; ++i) {
        if (inst.h[static_cast<std::size_t>(i)] != 0.0) {
            h.push_back({{"i", i}, {"c", inst.h[static_cast<std::size_t>(i)]}});
        }
    }
    json jj = json::array();
    for (const auto& [key, c] : inst.J) {
        jj.push_back({{"i", key.first}, {"j", key.second}, {"c", c}});
    }
    return json{{"n", inst.n},     {"k", inst.k}, {"const", inst.const_term},
                {"h", std::move(h)}, {"J", std::move(jj)}, {"label", inst.label}};
}

ProblemInstance instance_from_json(const nlohmann::json& j) {
    ProblemInstance inst;
    try {
        inst.n = j.at("n").get<int>();
        inst.k = j.at("k").get<int>();
        inst.const_term = j.at("const").get<double>();
        inst.label = j.at("label").get<std::string>();
        if (inst.n < 1 || inst.n > 64) throw validation_error("instance: n out of range");
        inst.h.assign(static_cast<std::size_t>(inst.n), 0.0);
        for (const auto& t : j.at("h")) {
            const int i = t.at("i").get<int>();
            if (i < 0 || i >= inst.n) throw validation_error("instance: h index out of range");
            inst.h[static_cast<std::size_t>(i)] += t.at("c").get<double>();
        }
        for (const auto& t : j.at("J")) {
            int a = t.at("i").get<int>();
            int b = t.at("j").get<int>();
            if (a > b) std::swap(a, b);
            if (a < 0 || b >= inst.n || a == b) {
                throw validation_error("instance: J index pair out of range");
            }
            inst.J[{a, b}] += t.at("c").get<double>();
        }
    } catch (const json::exception& e) {
        throw parse_error(std::string("instance JSON: ") + e.what(), 0);
    }
    return inst;
}

void write_instance(const std::string& path, const ProblemInstance& inst) {
    std::ofstream os(path);
    if (!os) throw validation_error("cannot open for writing: " + path);
    os << instance_to_json(inst).dump(2) << '\n';
}

ProblemInstance read_instance(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw validation_error("cannot open: " + path);
    json j;
    try {
        is >> j;
    } catch (const json::parse_error& e) {
        throw parse_error(std::string("instance JSON: ") + e.what(),
                          static_cast<int>(e.byte));
    }
    return instance_from_json(j);
}

std::string arm_name(const ExperimentConfig& config) {
    std::string name = config.mode == QaoaMode::MA ? "ma" : "sa";
    name += config.warm_start ? "-ws" : "-rnd";
    return name;
}

std::string utc_timestamp() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

namespace {

json phase_to_json(const std::vector<PhasePoint>& phase) {
    json out = json::array();
    for (const PhasePoint& p : phase) {
        out.push_back({{"step", p.step}, {"loss", p.loss}, {"ar", p.ar}, {"succ", p.succ}});
    }
    return out;
}

}  // namespace

nlohmann::json run_record_to_json(const RunRecord& record, const ProblemInstance& inst,
                                  const std::string& timestamp) {
    const ExperimentConfig& c = record.config;
    json config{{"p", c.p},
                {"restarts", c.restarts},
                {"steps_per_phase", c.steps_per_phase},
                {"lr", c.lr},
                {"seed", c.seed},
                {"mode", c.mode == QaoaMode::MA ? "ma" : "sa"},
                {"arm", c.warm_start ? "ws" : "rand"}};
    json restarts = json::array();
    for (const RestartTrace& rt : record.restarts) {
        json r{{"seed", rt.seed},
               {"pretrain", phase_to_json(rt.pretrain)},
               {"refine", phase_to_json(rt.refine)},
               {"transfer_gap", rt.transfer_gap},
               {"final_loss", rt.final_loss},
               {"final_ar", rt.final_ar},
               {"final_succ", rt.final_succ}};
        restarts.push_back(std::move(r));
    }
    return json{{"timestamp", timestamp.empty() ? utc_timestamp() : timestamp},
                {"config", std::move(config)},
                {"instance", instance_to_json(inst)},
                {"restarts", std::move(restarts)},
                {"summary", {{"best_ar", record.best_ar}, {"best_succ", record.best_succ}}}};
}

namespace {

const RestartTrace& best_restart(const RunRecord& record) {
    const RestartTrace* best = &record.restarts.front();
    for (const RestartTrace& rt : record.restarts) {
        if (rt.final_loss < best->final_loss) best = &rt;
    }
    return *best;
}

void print_row(std::ostream& os, double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    os << buf;
}

}  // namespace

void write_step_csv(std::ostream& os, const std::vector<RunRecord>& records) {
    os << "step,arm,ar,succ\n";
    for (const RunRecord& record : records) {
        const std::string arm = arm_name(record.config);
        const RestartTrace& rt = best_restart(record);
        int offset = 0;
        for (const auto* phase : {&rt.pretrain, &rt.refine}) {
            for (const PhasePoint& p : *phase) {
                os << (offset + p.step) << ',' << arm << ',';
                print_row(os, p.ar);
                os << ',';
                print_row(os, p.succ);
                os << '\n';
            }
            if (!phase->empty()) offset += phase->back().step + 1;
        }
    }
}

void write_sweep_csv(std::ostream& os, const std::vector<RunRecord>& records) {
    os << "instance,arm,p,best_ar,best_succ\n";
    for (const RunRecord& record : records) {
        os << record.instance_label << ',' << arm_name(record.config) << ','
           << record.config.p << ',';
        print_row(os, record.best_ar);
        os << ',';
        print_row(os, record.best_succ);
        os << '\n';
    }
}

}  // namespace xylab
