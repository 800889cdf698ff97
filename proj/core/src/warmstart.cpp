#include "xylab/warmstart.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "xylab/errors.hpp"

namespace xylab {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::vector<double> uniform_init(int count, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> dist(0.0, 2.0 * std::numbers::pi);
    std::vector<double> params(static_cast<std::size_t>(count));
    for (double& p : params) p = dist(rng);
    return params;
}

/// Converts an optimizer trace into (step, loss, AR, succ) points; the loss
/// comes from the trace, AR affinely from the loss, and succ from re-running
/// the circuit at the recorded parameters.
std::vector<PhasePoint> annotate(const Circuit& c, const std::vector<TracePoint>& trace,
                                 const ProblemInstance& inst, const std::vector<double>& diag,
                                 const SpectrumBounds& bounds) {
    std::vector<PhasePoint> out;
    out.reserve(trace.size());
    for (const TracePoint& t : trace) {
        State state = dicke_state(inst.n, inst.k);
        apply_circuit(c, t.params, state);
        Metrics m = metrics(state, diag, bounds);
        out.push_back({t.step, t.loss, m.ar, m.succ});
    }
    return out;
}

}  // namespace

Metrics metrics(const State& state, const std::vector<double>& diag, const SpectrumBounds& b) {
    if (!(b.e_max > b.e_min)) {
        throw validation_error("metrics: degenerate spectrum (e_min == e_max)");
    }
    double energy = expectation(state, diag);
    Metrics m;
    m.ar = (energy - b.e_max) / (b.e_min - b.e_max);
    m.succ = 0.0;
    for (std::uint64_t x : b.argmin) {
        m.succ += std::norm(state.amp[x]);
    }
    return m;
}

std::uint64_t derive_seed(std::uint64_t master, int restart, const std::string& arm) {
    std::uint64_t h = splitmix64(master);
    h = splitmix64(h ^ static_cast<std::uint64_t>(restart));
    for (unsigned char c : arm) {
        h = splitmix64(h ^ c);
    }
    return h;
}

RunRecord warm_start_run(const ProblemInstance& inst, const ExperimentConfig& config) {
    if (config.p < 1 || config.restarts < 1 || config.steps_per_phase < 0) {
        throw validation_error("warm_start_run: need p >= 1, restarts >= 1, steps_per_phase >= 0");
    }
    const std::vector<double> diag = instance_diagonal(inst);
    const SpectrumBounds bounds = exact_spectrum_bounds(inst);

    Circuit full;
    Circuit restricted;  // warm-start arm only
    bool has_restricted = config.warm_start;
    if (config.mode == QaoaMode::MA) {
        full = build_ma_circuit(inst.n, config.p);
        if (has_restricted) restricted = build_ws_circuit(inst.n, config.p);
    } else {
        SaCircuits sa = build_sa_circuits(inst.n, config.p, inst);
        full = sa.full;
        if (has_restricted) restricted = sa.ws;
    }

    AdamOptions opt;
    opt.lr = config.lr;
    opt.record_params = true;
    opt.finite_difference = config.finite_difference;

    const std::string arm = config.warm_start
                                ? (config.mode == QaoaMode::MA ? "ma-ws" : "sa-ws")
                                : (config.mode == QaoaMode::MA ? "ma-rnd" : "sa-rnd");

    RunRecord record;
    record.config = config;
    record.instance_label = inst.label;
    record.restarts.reserve(static_cast<std::size_t>(config.restarts));

    for (int r = 0; r < config.restarts; ++r) {
        RestartTrace rt;
        rt.seed = derive_seed(config.seed, r, arm);
        std::mt19937_64 rng(rt.seed);

        std::vector<double> full_params;
        if (config.warm_start) {
            // Restrict + pretrain on the poly-DLA circuit.
            std::vector<double> init = uniform_init(restricted.param_count, rng);
            opt.steps = config.steps_per_phase;
            TrainResult pre = adam_optimize(restricted, std::move(init), inst, diag, opt);
            rt.pretrain = annotate(restricted, pre.trace, inst, diag, bounds);

            // Transfer: identity-initialize the problem-coupling slots and
            // check loss continuity into the full circuit.
            full_params = transfer_params(restricted, full, pre.params);
            double l_ws = rt.pretrain.back().loss;
            double l_full = evaluate_loss(full, full_params, inst, diag);
            rt.transfer_gap = std::abs(l_full - l_ws);
        } else {
            full_params = uniform_init(full.param_count, rng);
        }

        // Both arms refine the full circuit for the same number of steps;
        // the warm-start arm's pretrain phase is its extra preparation cost.
        opt.steps = config.steps_per_phase;
        TrainResult fin = adam_optimize(full, std::move(full_params), inst, diag, opt);
        rt.refine = annotate(full, fin.trace, inst, diag, bounds);

        const PhasePoint& last = rt.refine.back();
        rt.final_loss = last.loss;
        rt.final_ar = last.ar;
        rt.final_succ = last.succ;
        record.restarts.push_back(std::move(rt));
    }

    const auto best = std::min_element(
        record.restarts.begin(), record.restarts.end(),
        [](const RestartTrace& a, const RestartTrace& b) { return a.final_loss < b.final_loss; });
    record.best_ar = best->final_ar;
    record.best_succ = best->final_succ;
    return record;
}

}  // namespace xylab
