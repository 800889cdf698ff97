#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "xylab/errors.hpp"

namespace xylab {

/// Diagonal cost Hamiltonian H_f = const + sum h_i Z_i + sum_{i<j} J_ij Z_i Z_j
/// together with the cardinality constraint |x| = k.  Qubits are 0-based
/// here (wire-format convention): bit i of a basis index is variable x_i.
struct ProblemInstance {
    int n = 0;
    int k = 0;
    double const_term = 0.0;
    std::vector<double> h;                   // size n
    std::map<std::pair<int, int>, double> J;  // keys (i<j)
    std::string label;

    /// <x|H_f|x> with Z eigenvalue +1 on bit 0.
    double energy(std::uint64_t x) const;
};

/// Exact feasible-subspace extrema: enumerates only Hamming-weight-k states
/// (n <= 20).  States within 1e-9 of E_min form the success projector.
struct SpectrumBounds {
    double e_min = 0.0;
    double e_max = 0.0;
    std::vector<std::uint64_t> argmin;
};
SpectrumBounds exact_spectrum_bounds(const ProblemInstance& inst);

/// Portfolio objective f(x) = -p.x + q x^T C x encoded via sigma^1 = (I-Z)/2
/// (the full double sum over C, diagonal included).
ProblemInstance embed_portfolio(const std::vector<double>& p,
                                const std::vector<std::vector<double>>& C, double q, int k);

/// Graph partitioning (balanced min-cut): H = |E|/2 + (1/2) sum_{(i,j) in E}
/// Z_i Z_j, whose diagonal is the cut size (1-x)^T A x.  Requires even n;
/// k = n/2.
ProblemInstance embed_graph_partition(const std::vector<std::pair<int, int>>& edges, int n);

/// Sparsest k-subgraph: H = sum_{(i,j) in E} sigma^1_i sigma^1_j, counting
/// edges inside the selected vertex set.
ProblemInstance embed_sparsest_subgraph(const std::vector<std::pair<int, int>>& edges, int n,
                                        int k);

}  // namespace xylab
