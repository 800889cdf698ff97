// xylab command-line front end: DLA dimension tables, algebra verification,
// market-data ingestion, random graphs, and warm-started QAOA experiments.

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "xylab/catalog.hpp"
#include "xylab/dla.hpp"
#include "xylab/graphs.hpp"
#include "xylab/io.hpp"
#include "xylab/market.hpp"
#include "xylab/warmstart.hpp"

namespace {

using namespace xylab;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;

struct NRange {
    int lo = 0;
    int hi = 0;
};

NRange parse_range(const std::string& text) {
    NRange r;
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            r.lo = r.hi = std::stoi(text);
        } else {
            r.lo = std::stoi(text.substr(0, dots));
            r.hi = std::stoi(text.substr(dots + 2));
        }
    } catch (const std::exception&) {
        throw validation_error("bad range '" + text + "' (expected N or A..B)");
    }
    if (r.lo > r.hi) throw validation_error("empty range '" + text + "'");
    return r;
}

std::ostream& open_out(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw validation_error("cannot open for writing: " + path);
    return file;
}

int job_count(int flag_jobs) {
    if (const char* env = std::getenv("XYLAB_JOBS")) {
        try {
            flag_jobs = std::stoi(env);
        } catch (const std::exception&) {
            throw validation_error("XYLAB_JOBS must be an integer");
        }
    }
    if (flag_jobs < 1) throw validation_error("--jobs must be >= 1");
    return flag_jobs;
}

/// Runs tasks[0..N) on `jobs` worker threads; tasks only write their own slot,
/// so the merged result order is index-stable.
void parallel_for(int jobs, const std::vector<std::function<void()>>& tasks) {
    if (jobs <= 1 || tasks.size() <= 1) {
        for (const auto& t : tasks) t();
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr error;
    std::mutex error_mu;
    const int workers = std::min<int>(jobs, static_cast<int>(tasks.size()));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < tasks.size(); i = next++) {
                try {
                    tasks[i]();
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mu);
                    if (!error) error = std::current_exception();
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

bool poly_topology(Topology t) {
    switch (t) {
        case Topology::XY_path:
        case Topology::XY_cycle:
        case Topology::XY_path_Z:
        case Topology::XY_cycle_Z:
            return true;
        default:
            return false;
    }
}

// ---------------------------------------------------------------- dla-dim

int cmd_dla_dim(const std::string& topology, const std::string& range, const std::string& out,
                bool extended) {
    Topology topo;
    if (!topology_from_name(topology, topo)) {
        throw validation_error("unknown topology '" + topology + "'");
    }
    const NRange r = parse_range(range);
    const int cap = poly_topology(topo) ? 12 : (extended ? 9 : 7);
    if (r.lo < 3) throw validation_error(topology + " needs n >= 3, got " + range);
    if (r.hi > cap) {
        std::ostringstream msg;
        msg << topology << " supports n up to " << cap
            << (poly_topology(topo) || extended ? "" : " (9 with --extended)") << ", got "
            << range;
        throw capacity_error(msg.str());
    }
    std::ofstream file;
    std::ostream& os = open_out(file, out);
    os << "topology,n,dim_built,dim_expected,match\n";
    bool all_match = true;
    for (int n = r.lo; n <= r.hi; ++n) {
        const DlaBasis basis = build_dla(make_generators(topo, n));
        const std::uint64_t expected = expected_dim(topo, n);
        const bool match = basis.converged && basis.dim == expected;
        all_match = all_match && match;
        os << topology << ',' << n << ',' << basis.dim << ',' << expected << ','
           << (match ? "yes" : "no") << '\n';
    }
    return all_match ? kExitOk : kExitMismatch;
}

// ---------------------------------------------------------- verify-algebra

int cmd_verify_algebra(const std::string& range, const std::string& out) {
    const NRange r = parse_range(range);
    if (r.lo < 3) throw validation_error("verify-algebra needs n >= 3");
    if (r.hi > 8) throw capacity_error("verify-algebra supports n up to 8");
    nlohmann::json report = nlohmann::json::array();
    bool all_pass = true;
    for (int n = r.lo; n <= r.hi; ++n) {
        nlohmann::json checks = nlohmann::json::array();
        auto add = [&](const std::string& suite, const std::vector<RelationReport>& reports) {
            for (const RelationReport& rr : reports) {
                all_pass = all_pass && rr.pass;
                checks.push_back({{"suite", suite},
                                  {"relation", rr.relation},
                                  {"instances", rr.instances},
                                  {"max_residual", rr.max_residual},
                                  {"pass", rr.pass}});
            }
        };
        add("su-path", check_su_relations(n, RelationTopology::Path));
        if (n % 2 == 1) add("su-odd-cycle", check_su_relations(n, RelationTopology::OddCycle));
        add("su-path-z", check_su_relations(n, RelationTopology::PathZ));
        add("su-cycle-z", check_su_relations(n, RelationTopology::CycleZ));
        add("zhat-maps", check_zhat_maps(n));

        double nest = 0.0;
        int nest_count = 0;
        for (int j = 1; j <= n; ++j) {
            for (int k = j + 1; k <= n; ++k) {
                nest = std::max(nest, nested_generation_residual_P(n, j, k));
                ++nest_count;
            }
        }
        const bool nest_pass = nest < 1e-12;
        all_pass = all_pass && nest_pass;
        checks.push_back({{"suite", "nested-generation"},
                          {"relation", "P_{j,k} from adjacent XY commutators"},
                          {"instances", nest_count},
                          {"max_residual", nest},
                          {"pass", nest_pass}});

        const double loop = nested_generation_residual_Dminus_cycle(n);
        const bool loop_pass = loop < 1e-12;
        all_pass = all_pass && loop_pass;
        checks.push_back({{"suite", "nested-generation"},
                          {"relation", n % 2 == 1 ? "full cycle loop reaches D^-_{n,1}"
                                                  : "full cycle loop vanishes (even n)"},
                          {"instances", 1},
                          {"max_residual", loop},
                          {"pass", loop_pass}});
        report.push_back({{"n", n}, {"checks", std::move(checks)}});
    }
    std::ofstream file;
    std::ostream& os = open_out(file, out);
    os << nlohmann::json{{"pass", all_pass}, {"results", std::move(report)}}.dump(2) << '\n';
    return all_pass ? kExitOk : kExitMismatch;
}

// ----------------------------------------------------------- ingest-prices

int cmd_ingest_prices(const std::string& csv, const std::string& month, int n, double q, int k,
                      const std::string& out, bool list_months) {
    const MarketData data = ingest_prices_file(csv);
    for (const std::string& w : data.warnings) std::cerr << "warning: " << w << '\n';
    if (list_months) {
        for (const MonthStats& m : data.months) {
            std::cout << m.month << ' ' << m.tickers.size() << " tickers\n";
        }
        return kExitOk;
    }
    const auto it = std::find_if(data.months.begin(), data.months.end(),
                                 [&](const MonthStats& m) { return m.month == month; });
    if (it == data.months.end()) throw validation_error("month not in data: " + month);
    if (k <= 0) k = n / 2;
    const ProblemInstance inst = portfolio_instance(*it, n, q, k);
    if (out.empty()) {
        std::cout << instance_to_json(inst).dump(2) << '\n';
    } else {
        write_instance(out, inst);
    }
    return kExitOk;
}

// --------------------------------------------------------------- gen-graph

int cmd_gen_graph(const std::string& kind, int n, std::uint64_t seed, const std::string& out) {
    GraphKind gk;
    if (kind == "reg3") {
        gk = GraphKind::Reg3;
    } else if (kind == "rnd2n") {
        gk = GraphKind::Rnd2n;
    } else {
        throw validation_error("unknown graph kind '" + kind + "' (reg3|rnd2n)");
    }
    const EdgeList edges = random_graph(gk, n, seed);
    std::ofstream file;
    std::ostream& os = open_out(file, out);
    write_edge_list(os, edges, n);
    return kExitOk;
}

// ---------------------------------------------------------------- run-qaoa

struct ProblemFlags {
    std::string instance_path;
    std::string problem = "sparsest";  // sparsest|partition|portfolio
    std::string graph = "rnd2n";
    std::string graph_file;
    int n = 8;
    int k = 0;  // 0: problem default
    std::uint64_t graph_seed = 1;
    std::string prices_csv;
    std::string month;
    double q = 1.0;
};

ProblemInstance make_instance(const ProblemFlags& f) {
    if (!f.instance_path.empty()) return read_instance(f.instance_path);
    if (f.problem == "portfolio") {
        if (f.prices_csv.empty() || f.month.empty()) {
            throw validation_error("portfolio needs --prices and --month");
        }
        const MarketData data = ingest_prices_file(f.prices_csv);
        const auto it = std::find_if(data.months.begin(), data.months.end(),
                                     [&](const MonthStats& m) { return m.month == f.month; });
        if (it == data.months.end()) throw validation_error("month not in data: " + f.month);
        return portfolio_instance(*it, f.n, f.q, f.k > 0 ? f.k : f.n / 2);
    }
    EdgeList edges;
    int n = f.n;
    if (!f.graph_file.empty()) {
        edges = read_edge_list_file(f.graph_file, n);
    } else if (f.graph == "reg3") {
        edges = random_graph(GraphKind::Reg3, f.n, f.graph_seed);
    } else if (f.graph == "rnd2n") {
        edges = random_graph(GraphKind::Rnd2n, f.n, f.graph_seed);
    } else {
        throw validation_error("unknown graph kind '" + f.graph + "' (reg3|rnd2n)");
    }
    if (f.problem == "partition") return embed_graph_partition(edges, n);
    if (f.problem == "sparsest") {
        return embed_sparsest_subgraph(edges, n, f.k > 0 ? f.k : n / 2);
    }
    throw validation_error("unknown problem '" + f.problem +
                           "' (sparsest|partition|portfolio)");
}

std::vector<ExperimentConfig> arm_configs(const std::string& arms, const std::string& mode,
                                          const ExperimentConfig& base) {
    std::vector<ExperimentConfig> configs;
    std::stringstream ss(arms);
    std::string arm;
    while (std::getline(ss, arm, ',')) {
        ExperimentConfig c = base;
        if (mode == "ma") {
            c.mode = QaoaMode::MA;
        } else if (mode == "sa") {
            c.mode = QaoaMode::SA;
        } else {
            throw validation_error("unknown mode '" + mode + "' (ma|sa)");
        }
        if (arm == "ws") {
            c.warm_start = true;
        } else if (arm == "rand") {
            c.warm_start = false;
        } else {
            throw validation_error("unknown arm '" + arm + "' (ws|rand)");
        }
        configs.push_back(c);
    }
    if (configs.empty()) throw validation_error("--arms must name at least one arm");
    return configs;
}

int cmd_run_qaoa(const ProblemFlags& pf, const ExperimentConfig& base, const std::string& arms,
                 const std::string& mode, const std::string& out_json,
                 const std::string& out_csv, int jobs) {
    const ProblemInstance inst = make_instance(pf);
    if (inst.n > 16) throw capacity_error("run-qaoa supports n <= 16");
    const std::vector<ExperimentConfig> configs = arm_configs(arms, mode, base);

    std::vector<RunRecord> records(configs.size());
    std::vector<std::function<void()>> tasks;
    for (std::size_t i = 0; i < configs.size(); ++i) {
        tasks.push_back([&, i] { records[i] = warm_start_run(inst, configs[i]); });
    }
    parallel_for(jobs, tasks);

    const std::string ts = utc_timestamp();
    nlohmann::json runs = nlohmann::json::array();
    for (const RunRecord& r : records) runs.push_back(run_record_to_json(r, inst, ts));
    {
        std::ofstream file;
        std::ostream& os = open_out(file, out_json);
        os << nlohmann::json{{"version", "1.0.0"}, {"runs", std::move(runs)}}.dump(2) << '\n';
    }
    if (!out_csv.empty()) {
        std::ofstream csv(out_csv);
        if (!csv) throw validation_error("cannot open for writing: " + out_csv);
        write_step_csv(csv, records);
    }
    for (const RunRecord& r : records) {
        std::cerr << inst.label << ' ' << arm_name(r.config) << " best_ar=" << r.best_ar
                  << " best_succ=" << r.best_succ << '\n';
    }
    return kExitOk;
}

// ------------------------------------------------------------- sweep-depth

struct Quartiles {
    double q1 = 0.0, med = 0.0, q3 = 0.0;
};

Quartiles quartiles(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    auto at = [&](double q) {
        const double pos = q * (static_cast<double>(v.size()) - 1.0);
        const std::size_t lo = static_cast<std::size_t>(pos);
        const std::size_t hi = std::min(lo + 1, v.size() - 1);
        const double frac = pos - static_cast<double>(lo);
        return v[lo] * (1.0 - frac) + v[hi] * frac;
    };
    return {at(0.25), at(0.5), at(0.75)};
}

int cmd_sweep_depth(const ProblemFlags& pf, const ExperimentConfig& base,
                    const std::string& arms, const std::string& mode, int instances,
                    const std::string& p_list, const std::string& out, int jobs) {
    std::vector<int> ps;
    {
        std::stringstream ss(p_list);
        std::string tok;
        while (std::getline(ss, tok, ',')) ps.push_back(std::stoi(tok));
    }
    if (ps.empty()) throw validation_error("--p-list must name at least one depth");
    if (instances < 1) throw validation_error("--instances must be >= 1");

    std::vector<ProblemInstance> insts;
    for (int i = 0; i < instances; ++i) {
        ProblemFlags f = pf;
        f.graph_seed = pf.graph_seed + static_cast<std::uint64_t>(i);
        insts.push_back(make_instance(f));
        if (insts.back().n > 16) throw capacity_error("sweep-depth supports n <= 16");
    }
    const std::vector<ExperimentConfig> arm_base = arm_configs(arms, mode, base);

    // records[p_index][arm_index][instance_index], filled in parallel.
    std::vector<std::vector<std::vector<RunRecord>>> records(
        ps.size(), std::vector<std::vector<RunRecord>>(
                       arm_base.size(), std::vector<RunRecord>(insts.size())));
    std::vector<std::function<void()>> tasks;
    for (std::size_t pi = 0; pi < ps.size(); ++pi) {
        for (std::size_t ai = 0; ai < arm_base.size(); ++ai) {
            for (std::size_t ii = 0; ii < insts.size(); ++ii) {
                tasks.push_back([&, pi, ai, ii] {
                    ExperimentConfig c = arm_base[ai];
                    c.p = ps[pi];
                    records[pi][ai][ii] = warm_start_run(insts[ii], c);
                });
            }
        }
    }
    parallel_for(jobs, tasks);

    std::ofstream file;
    std::ostream& os = open_out(file, out);
    os << "p,arm,instances,ar_q1,ar_median,ar_q3,succ_q1,succ_median,succ_q3\n";
    std::vector<double> prev_ws_median(arm_base.size(), -1.0);
    for (std::size_t pi = 0; pi < ps.size(); ++pi) {
        for (std::size_t ai = 0; ai < arm_base.size(); ++ai) {
            std::vector<double> ars, succs;
            for (const RunRecord& r : records[pi][ai]) {
                ars.push_back(r.best_ar);
                succs.push_back(r.best_succ);
            }
            const Quartiles qa = quartiles(ars);
            const Quartiles qs = quartiles(succs);
            os << ps[pi] << ',' << arm_name(arm_base[ai]) << ',' << insts.size() << ',' << qa.q1
               << ',' << qa.med << ',' << qa.q3 << ',' << qs.q1 << ',' << qs.med << ',' << qs.q3
               << '\n';
            if (arm_base[ai].warm_start) {
                if (qa.med + 1e-12 < prev_ws_median[ai]) {
                    std::cerr << "warning: " << arm_name(arm_base[ai])
                              << " median AR decreased from p=" << ps[pi - 1]
                              << " to p=" << ps[pi] << '\n';
                }
                prev_ws_median[ai] = qa.med;
            }
        }
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"XY-mixer dynamical Lie algebras and warm-started QAOA"};
    app.require_subcommand(1);
    int jobs = 1;
    app.add_option("--jobs", jobs, "worker threads (env XYLAB_JOBS overrides)");

    // dla-dim
    auto* dla = app.add_subcommand("dla-dim", "build DLA dimension tables");
    std::string dla_topology, dla_range = "3..6", dla_out;
    bool dla_extended = false;
    dla->add_option("--topology", dla_topology, "topology name, e.g. xy-clique-z")->required();
    dla->add_option("--n", dla_range, "qubit range A..B");
    dla->add_option("--out", dla_out, "output CSV path (default stdout)");
    dla->add_flag("--extended", dla_extended, "allow n up to 9 for exponential families");

    // verify-algebra
    auto* verify = app.add_subcommand("verify-algebra", "run SO/SU relation suites");
    std::string verify_range = "3..6", verify_out;
    verify->add_option("--n", verify_range, "qubit range A..B (max 8)");
    verify->add_option("--out", verify_out, "output JSON path (default stdout)");

    // ingest-prices
    auto* ingest = app.add_subcommand("ingest-prices", "price CSV -> portfolio instance");
    std::string ing_csv, ing_month, ing_out;
    int ing_n = 8, ing_k = 0;
    double ing_q = 1.0;
    bool ing_list = false;
    ingest->add_option("--csv", ing_csv, "price CSV (date,ticker,close)")->required();
    ingest->add_option("--month", ing_month, "month YYYY-MM");
    ingest->add_option("--n", ing_n, "assets to select (top mean return)");
    ingest->add_option("--k", ing_k, "budget (default n/2)");
    ingest->add_option("--q", ing_q, "risk aversion");
    ingest->add_option("--out", ing_out, "instance JSON path (default stdout)");
    ingest->add_flag("--list-months", ing_list, "list available months and exit");

    // gen-graph
    auto* gen = app.add_subcommand("gen-graph", "sample a random graph");
    std::string gen_kind = "rnd2n", gen_out;
    int gen_n = 8;
    std::uint64_t gen_seed = 1;
    gen->add_option("--kind", gen_kind, "reg3|rnd2n");
    gen->add_option("--n", gen_n, "vertices");
    gen->add_option("--seed", gen_seed, "RNG seed");
    gen->add_option("--out", gen_out, "edge-list path (default stdout)");

    // shared experiment flags
    ProblemFlags pf;
    ExperimentConfig base;
    std::string arms = "ws,rand", mode = "ma";
    auto add_experiment_flags = [&](CLI::App* cmd) {
        cmd->add_option("--instance", pf.instance_path, "instance JSON path");
        cmd->add_option("--problem", pf.problem, "sparsest|partition|portfolio");
        cmd->add_option("--graph", pf.graph, "reg3|rnd2n generator");
        cmd->add_option("--graph-file", pf.graph_file, "edge-list file");
        cmd->add_option("--n", pf.n, "problem size");
        cmd->add_option("--k", pf.k, "cardinality (default depends on problem)");
        cmd->add_option("--graph-seed", pf.graph_seed, "graph generator seed");
        cmd->add_option("--prices", pf.prices_csv, "price CSV for portfolio");
        cmd->add_option("--month", pf.month, "month YYYY-MM for portfolio");
        cmd->add_option("--q", pf.q, "risk aversion for portfolio");
        cmd->add_option("--restarts", base.restarts, "independent restarts per arm");
        cmd->add_option("--steps", base.steps_per_phase, "Adam steps per phase");
        cmd->add_option("--lr", base.lr, "Adam learning rate");
        cmd->add_option("--seed", base.seed, "master seed");
        cmd->add_option("--arms", arms, "comma list of ws,rand");
        cmd->add_option("--mode", mode, "ma|sa parameter sharing");
    };

    // run-qaoa
    auto* run = app.add_subcommand("run-qaoa", "train warm-start / random arms");
    std::string run_json_out, run_csv_out;
    add_experiment_flags(run);
    run->add_option("--p", base.p, "circuit depth");
    run->add_option("--out-json", run_json_out, "RunRecord JSON path (default stdout)");
    run->add_option("--out-csv", run_csv_out, "per-step CSV path");

    // sweep-depth
    auto* sweep = app.add_subcommand("sweep-depth", "quartile summary across depths");
    std::string sweep_p = "1,2,4", sweep_out;
    int sweep_instances = 10;
    add_experiment_flags(sweep);
    sweep->add_option("--p-list", sweep_p, "comma list of depths");
    sweep->add_option("--instances", sweep_instances, "instance count (seeds graph-seed+i)");
    sweep->add_option("--out", sweep_out, "long-format CSV path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        const int j = job_count(jobs);
        if (dla->parsed()) return cmd_dla_dim(dla_topology, dla_range, dla_out, dla_extended);
        if (verify->parsed()) return cmd_verify_algebra(verify_range, verify_out);
        if (ingest->parsed()) {
            return cmd_ingest_prices(ing_csv, ing_month, ing_n, ing_q, ing_k, ing_out, ing_list);
        }
        if (gen->parsed()) return cmd_gen_graph(gen_kind, gen_n, gen_seed, gen_out);
        if (run->parsed()) {
            return cmd_run_qaoa(pf, base, arms, mode, run_json_out, run_csv_out, j);
        }
        if (sweep->parsed()) {
            return cmd_sweep_depth(pf, base, arms, mode, sweep_instances, sweep_p, sweep_out, j);
        }
    } catch (const capacity_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitCapacity;
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const validation_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
