#include "xylab/circuits.hpp"

#include <cmath>
#include <numbers>

namespace xylab {

namespace {

/// Cycle mixer pairs (0-based) in two internally commuting rounds:
/// (0,1),(2,3),... then (1,2),(3,4),...,(n-1,0).
std::vector<std::pair<int, int>> cycle_rounds(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i + 1 < n; i += 2) pairs.push_back({i, i + 1});
    for (int i = 1; i + 1 < n; i += 2) pairs.push_back({i, i + 1});
    pairs.push_back({n - 1, 0});
    return pairs;
}

void check_np(int n, int p) {
    if (n < 4 || n % 2 != 0 || n > kSimCapacity)
        throw validation_error("circuits require even n >= 4");
    if (p < 0) throw validation_error("depth must be >= 0");
}

}  // namespace

Circuit build_ma_circuit(int n, int p) {
    check_np(n, p);
    Circuit c;
    c.n = n;
    c.layers = p;
    c.sharing = SharingMode::MultiAngle;
    int idx = 0;
    const auto mixers = cycle_rounds(n);
    for (int layer = 0; layer < p; ++layer) {
        for (int q = 0; q < n; ++q) c.gates.push_back({GateKind::RZ, q, 0, idx++, 1.0});
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                c.gates.push_back({GateKind::RZZ, i, j, idx++, 1.0});
        for (auto [i, j] : mixers) c.gates.push_back({GateKind::XY, i, j, idx++, 0.5});
    }
    c.param_count = idx;
    return c;
}

Circuit build_ws_circuit(int n, int p) {
    Circuit c = build_ma_circuit(n, p);
    Circuit ws;
    ws.n = n;
    ws.layers = p;
    ws.sharing = SharingMode::MultiAngle;
    int idx = 0;
    for (const Gate& g : c.gates) {
        if (g.kind == GateKind::RZZ) continue;
        Gate h = g;
        h.param_index = idx++;
        ws.gates.push_back(h);
    }
    ws.param_count = idx;
    return ws;
}

SaCircuits build_sa_circuits(int n, int p, const ProblemInstance& inst) {
    check_np(n, p);
    if (inst.n != n) throw validation_error("instance size mismatch");
    SaCircuits out;
    const auto mixers = cycle_rounds(n);
    bool any_h = false;
    for (double hi : inst.h) any_h = any_h || hi != 0.0;
    out.ws_phase_vanishes = !any_h;

    auto add_phase_z = [&](Circuit& c, int idx) {
        for (int q = 0; q < n; ++q)
            if (inst.h[static_cast<std::size_t>(q)] != 0.0)
                c.gates.push_back({GateKind::RZ, q, 0, idx, inst.h[static_cast<std::size_t>(q)]});
    };
    auto add_mixers = [&](Circuit& c, int idx) {
        for (auto [i, j] : mixers) c.gates.push_back({GateKind::XY, i, j, idx, 0.5});
    };

    out.ws.n = out.full.n = n;
    out.ws.layers = out.full.layers = p;
    out.ws.sharing = out.full.sharing = SharingMode::SharedAngle;
    for (int layer = 0; layer < p; ++layer) {
        add_phase_z(out.ws, 2 * layer);
        add_mixers(out.ws, 2 * layer + 1);

        for (const auto& [ij, c] : inst.J)
            if (c != 0.0)
                out.full.gates.push_back({GateKind::RZZ, ij.first, ij.second, 3 * layer, c});
        add_phase_z(out.full, 3 * layer + 1);
        add_mixers(out.full, 3 * layer + 2);
    }
    out.ws.param_count = 2 * p;
    out.full.param_count = 3 * p;
    return out;
}

std::vector<double> transfer_params(const Circuit& ws, const Circuit& full,
                                    const std::vector<double>& ws_params) {
    if (ws_params.size() != static_cast<std::size_t>(ws.param_count))
        throw validation_error("warm-start parameter length mismatch");
    std::vector<double> out(static_cast<std::size_t>(full.param_count), 0.0);
    std::size_t wi = 0;
    for (const Gate& g : full.gates) {
        if (wi < ws.gates.size() && ws.gates[wi].kind == g.kind && ws.gates[wi].q1 == g.q1 &&
            ws.gates[wi].q2 == g.q2 && ws.gates[wi].coeff == g.coeff) {
            out[static_cast<std::size_t>(g.param_index)] =
                ws_params[static_cast<std::size_t>(ws.gates[wi].param_index)];
            ++wi;
        } else if (g.kind != GateKind::RZZ) {
            throw validation_error("full circuit does not structurally contain the ws circuit");
        }
    }
    if (wi != ws.gates.size())
        throw validation_error("full circuit does not structurally contain the ws circuit");
    return out;
}

namespace {

void apply_gate(State& s, const Gate& g, double angle) {
    switch (g.kind) {
        case GateKind::RZ: apply_rz(s, g.q1, angle); break;
        case GateKind::RZZ: apply_rzz(s, g.q1, g.q2, angle); break;
        case GateKind::XY: apply_xy(s, g.q1, g.q2, angle); break;
    }
}

/// Runs the circuit from the instance's Dicke state with one optional angle
/// offset spliced into gate `offset_gate`.
double run_loss(const Circuit& c, const std::vector<double>& params,
                const ProblemInstance& inst, const std::vector<double>& diag,
                std::ptrdiff_t offset_gate, double delta) {
    State s = dicke_state(inst.n, inst.k);
    for (std::size_t i = 0; i < c.gates.size(); ++i) {
        const Gate& g = c.gates[i];
        double angle = g.coeff * params[static_cast<std::size_t>(g.param_index)];
        if (static_cast<std::ptrdiff_t>(i) == offset_gate) angle += delta;
        apply_gate(s, g, angle);
    }
    return expectation(s, diag);
}

}  // namespace

void apply_circuit(const Circuit& c, const std::vector<double>& params, State& state) {
    if (params.size() != static_cast<std::size_t>(c.param_count))
        throw validation_error("parameter length mismatch");
    for (const Gate& g : c.gates)
        apply_gate(state, g, g.coeff * params[static_cast<std::size_t>(g.param_index)]);
}

double evaluate_loss(const Circuit& c, const std::vector<double>& params,
                     const ProblemInstance& inst, const std::vector<double>& diag) {
    if (params.size() != static_cast<std::size_t>(c.param_count))
        throw validation_error("parameter length mismatch");
    return run_loss(c, params, inst, diag, -1, 0.0);
}

std::vector<double> gradient(const Circuit& c, const std::vector<double>& params,
                             const ProblemInstance& inst, const std::vector<double>& diag) {
    if (params.size() != static_cast<std::size_t>(c.param_count))
        throw validation_error("parameter length mismatch");
    constexpr double pi = std::numbers::pi;
    std::vector<double> grad(params.size(), 0.0);
    for (std::size_t i = 0; i < c.gates.size(); ++i) {
        const Gate& g = c.gates[i];
        const auto gi = static_cast<std::ptrdiff_t>(i);
        double dangle = 0.0;
        if (g.kind == GateKind::XY) {
            // Applied-angle generator XX+YY has eigenvalues {0,+/-2}:
            // loss frequencies {2,4}; exact four-term equidistant rule.
            for (int mu = 1; mu <= 4; ++mu) {
                const double x = (2 * mu - 1) * pi / 4.0;
                const double cmu = ((mu % 2 == 1) ? 1.0 : -1.0) /
                                   (8.0 * std::sin(x / 2.0) * std::sin(x / 2.0));
                dangle += 2.0 * cmu * run_loss(c, params, inst, diag, gi, x / 2.0);
            }
        } else {
            // Generator eigenvalues +/-1: frequency-2 two-term rule.
            dangle = run_loss(c, params, inst, diag, gi, pi / 4.0) -
                     run_loss(c, params, inst, diag, gi, -pi / 4.0);
        }
        grad[static_cast<std::size_t>(g.param_index)] += g.coeff * dangle;
    }
    return grad;
}

std::vector<double> gradient_fd(const Circuit& c, const std::vector<double>& params,
                                const ProblemInstance& inst, const std::vector<double>& diag,
                                double h) {
    std::vector<double> grad(params.size(), 0.0);
    std::vector<double> pp = params;
    for (std::size_t i = 0; i < params.size(); ++i) {
        pp[i] = params[i] + h;
        const double fp = run_loss(c, pp, inst, diag, -1, 0.0);
        pp[i] = params[i] - h;
        const double fm = run_loss(c, pp, inst, diag, -1, 0.0);
        pp[i] = params[i];
        grad[i] = (fp - fm) / (2 * h);
    }
    return grad;
}

}  // namespace xylab
