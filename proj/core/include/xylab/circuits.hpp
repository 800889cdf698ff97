#pragma once

#include <string>
#include <vector>

#include "xylab/embeddings.hpp"
#include "xylab/sim.hpp"

namespace xylab {

enum class GateKind { RZ, RZZ, XY };

/// One parameterized gate: applied angle = coeff * params[param_index].
/// Multi-angle circuits use coeff 1 (RZ/RZZ) or 1/2 (XY, absorbing the
/// ½-normalized mixer generator); shared-angle circuits reuse one
/// param_index across a layer with per-gate Hamiltonian coefficients.
struct Gate {
    GateKind kind;
    int q1 = 0;
    int q2 = 0;  // unused for RZ
    int param_index = 0;
    double coeff = 1.0;
};

enum class SharingMode { MultiAngle, SharedAngle };

struct Circuit {
    int n = 0;
    int layers = 0;
    int param_count = 0;
    SharingMode sharing = SharingMode::MultiAngle;
    std::vector<Gate> gates;  // applied in order
};

/// Full MA-QAOA layer: n RZ + C(n,2) RZZ phase gates, then the n cycle XY
/// mixers in two commuting rounds (odd pairs, then even pairs).
/// param_count = (n^2 + 3n) p / 2.
Circuit build_ma_circuit(int n, int p);

/// Restricted warm-start circuit: the MA circuit with every RZZ deleted;
/// 2np parameters.
Circuit build_ws_circuit(int n, int p);

/// Shared-angle circuits: `ws` has 2 params/layer (alpha weighting the h_i
/// RZ phases, beta shared across mixers); `full` has 3, with gamma weighting
/// the J_ij RZZ phases (applied before the alpha phases and mixers).
struct SaCircuits {
    Circuit ws;
    Circuit full;
    bool ws_phase_vanishes = false;  // all h_i == 0 (e.g. graph partitioning)
};
SaCircuits build_sa_circuits(int n, int p, const ProblemInstance& inst);

/// Maps warm-start parameters into the containing full circuit: RZ/XY slots
/// copied, RZZ slots zero (identity-initialized).
std::vector<double> transfer_params(const Circuit& ws, const Circuit& full,
                                    const std::vector<double>& ws_params);

/// Applies the circuit to `state` in place.
void apply_circuit(const Circuit& c, const std::vector<double>& params, State& state);

/// <D^n_k| U^dag H_f U |D^n_k> with the instance's Dicke start.
double evaluate_loss(const Circuit& c, const std::vector<double>& params,
                     const ProblemInstance& inst, const std::vector<double>& diag);

/// Analytic parameter-shift gradient.  RZ/RZZ angles (generator eigenvalues
/// +/-1, frequency 2) use the two-term rule with shift pi/4; XY mixer
/// parameters (generator eigenvalues {0,+/-1}, frequencies {1,2}) need the
/// exact four-term equidistant rule.  Shared parameters sum per-gate shift
/// contributions with chain-rule coefficients.
std::vector<double> gradient(const Circuit& c, const std::vector<double>& params,
                             const ProblemInstance& inst, const std::vector<double>& diag);

/// Central finite differences (step h), for cross-validation.
std::vector<double> gradient_fd(const Circuit& c, const std::vector<double>& params,
                                const ProblemInstance& inst, const std::vector<double>& diag,
                                double h = 1e-5);

}  // namespace xylab
