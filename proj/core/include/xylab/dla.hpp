#pragma once

#include <cstdint>
#include <vector>

#include "xylab/pauli.hpp"

namespace xylab {

/// Mixer/phase-gate topologies whose generator sets we study.
enum class Topology {
    XY_path,
    XY_cycle,
    XY_clique,
    XY_path_Z,
    XY_cycle_Z,
    XY_clique_Z,
    XY_cycle_Z_ZZclique,
};

const char* topology_name(Topology t);
bool topology_from_name(const std::string& name, Topology& out);

/// i * XY_{j,k} = (i/2)(X_j X_k + Y_j Y_k), 1-based qubits.
LieElement xy_generator(int n, int j, int k);
/// i * Z_j.
LieElement z_generator(int n, int j);
/// i * Z_j Z_k.
LieElement zz_generator(int n, int j, int k);

struct GeneratorSet {
    Topology topology;
    int n;
    std::vector<LieElement> generators;
};

/// Generators for (topology, n): path XY_{j,j+1}; cycle adds XY_{n,1};
/// clique all pairs; +Z adds every i Z_j; the cycle+Z+ZZ variant adds the
/// full i Z_j Z_k clique.
GeneratorSet make_generators(Topology t, int n);

/// Orthonormal (under hs_inner) basis of the dynamical Lie algebra.
struct DlaBasis {
    std::vector<LieElement> elements;
    std::size_t dim = 0;
    bool converged = false;
    int rounds = 0;
};

/// Thrown when the basis would exceed max_dim; carries the partial basis.
class dla_capacity_error : public capacity_error {
  public:
    dla_capacity_error(const std::string& what, DlaBasis partial)
        : capacity_error(what), partial_(std::move(partial)) {}
    const DlaBasis& partial() const { return partial_; }

  private:
    DlaBasis partial_;
};

/// Iterative closure: orthonormalize the generators, then repeatedly
/// commutate each newly accepted element against every generator and
/// Gram-Schmidt the results into the basis until a full round adds nothing.
/// Modified Gram-Schmidt with one re-orthogonalization pass when the
/// residual shrinks below 1e-6 of the original; new directions accepted when
/// the residual norm exceeds `tol`.
DlaBasis build_dla(const GeneratorSet& gens, std::size_t max_dim = 200000, double tol = 1e-9);

/// Norm of e after projecting out span(basis); ~0 iff e is in the DLA.
double projection_residual(const LieElement& e, const DlaBasis& basis);

/// Basis of {b in span(basis) : [b,g] = 0 for all generators g}, via the
/// null space of the stacked commutator-coordinate matrix.
std::vector<LieElement> center(const DlaBasis& basis, const GeneratorSet& gens);

/// dim span{ traceless part of F_k b F_k : b in basis } where F_k projects
/// onto the Hamming-weight-k sector.  Dense route; requires n <= 6.
int hamming_block_project(const DlaBasis& basis, int n, int k);

/// Exact binomial coefficient (throws on overflow of unsigned long long).
unsigned long long binomial(int n, int k);

/// Closed-form DLA dimension per topology:
///   path n(n-1)/2; cycle n(n-1) (even) / n^2-1 (odd); path+Z n^2;
///   cycle+Z 2n^2-1; clique (C(2n,n)-n-1)/2 (odd) / (C(2n,n)-n-4)/2 (even);
///   clique+Z C(2n,n)-n; cycle+Z+ZZ C(2n,n)-n+1.
unsigned long long expected_dim(Topology t, int n);

}  // namespace xylab
