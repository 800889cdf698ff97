#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "xylab/embeddings.hpp"

namespace xylab {

/// Largest statevector qubit count.
inline constexpr int kSimCapacity = 20;

/// Full 2^n statevector.  Basis index bit i is (0-based) qubit i.
struct State {
    int n = 0;
    std::vector<std::complex<double>> amp;

    explicit State(int n_qubits);
    double norm() const;
    /// Total probability mass on states of Hamming weight != k.
    double out_of_sector_mass(int k) const;
};

/// |D^n_w>: uniform superposition of all weight-w basis states.
State dicke_state(int n, int w);

/// RZ(q, theta) = exp(i theta Z_q): phase e^{+i theta} on bit 0, e^{-i theta}
/// on bit 1.
void apply_rz(State& s, int q, double theta);

/// RZZ = exp(i theta Z_q1 Z_q2).
void apply_rzz(State& s, int q1, int q2, double theta);

/// XY gate exp(i theta (XX + YY)) on qubits (q1, q2): acts on the {01, 10}
/// block as [[cos 2theta, i sin 2theta], [i sin 2theta, cos 2theta]],
/// identity on {00, 11}.  (The ½-normalized mixer XY = (XX+YY)/2 therefore
/// corresponds to exp(i beta XY) = apply_xy(beta/2); circuit gates carry the
/// ½ in their coefficient.)
void apply_xy(State& s, int q1, int q2, double theta);

/// <psi| H_f |psi> via the precomputed diagonal of the instance.
double expectation(const State& s, const std::vector<double>& diag);

/// Diagonal of H_f over all 2^n basis states.
std::vector<double> instance_diagonal(const ProblemInstance& inst);

}  // namespace xylab
