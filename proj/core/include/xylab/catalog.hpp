#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "xylab/pauli.hpp"

namespace xylab {

/// Closed-form constructors for the XY-mixer DLA basis families.
///
/// Shorthand used below (1-based qubits, j < k):
///   chain(A,B)   = A_j Z_{j+1} ... Z_{k-1} B_k
///   outer(A,B)   = Z_1 ... Z_{j-1} A_j B_k Z_{k+1} ... Z_n
///   Zbar_l       = Z on every qubit except l
/// All families are real multiples of i * (Hermitian word sums), i.e.
/// LieElements.  Phase prefactors follow the parity-dependent exponents
///   c_jk  = 2 floor((k-j)/2) + 1
///   c-_jk = 2 ceil((n-k+j)/2) - 1
///   b_jk  = 2 floor((k-j)/2) - 1
///   b-_jk = 2 floor((n-k+j)/2) + 1
///   d_n   = 2 floor(n/2) + 1
/// which are all odd, making every family skew-Hermitian.

/// P_{j,k}: (i^{c_jk}/2)(chain(X,X)+chain(Y,Y)) for odd k-j,
///          (i^{c_jk}/2)(chain(X,Y)-chain(Y,X)) for even k-j.
/// Generated by nesting XY mixers along the path (P_{j,j+1} = i XY_{j,j+1}).
LieElement make_P(int n, int j, int k);

/// P^-_{j,k}: the outer-chain counterpart with exponent c-_jk and cases on
/// the parity of n-k+j.
LieElement make_Pminus(int n, int j, int k);

/// Q_{j,k} = (1/2)[D_{j,k}, P_{j,k}].
LieElement make_Q(int n, int j, int k);

/// Q^-_{j,k} = (1/2)[D_{j,k}, P^-_{j,k}].
LieElement make_Qminus(int n, int j, int k);

/// D_{j,k} = (i/2)(Z_j - Z_k).  Valid for any j != k.
LieElement make_D(int n, int j, int k);

/// D^-_{j,k} = (i^{d_n}/2)(Zbar_j - Zbar_k).  Valid for any j != k
/// (the full-cycle nesting at odd n lands on D^-_{n,1}).
LieElement make_Dminus(int n, int j, int k);

/// Zhat = (-1)^{floor(n/2)} Z^{(x)n}: a Hermitian involution commuting with
/// every XY mixer; returned as a signed Pauli string, not a LieElement.
PauliString make_Zhat(int n);

/// Z+ = i * sum_j Z_j (the Hamming-weight symmetry generator).
LieElement make_Zplus(int n);

/// ZZ+ = i * sum_{j<k} Z_j Z_k.
LieElement make_ZZplus(int n);

/// (1/2)(e + sign * Zhat  * e): projection of e onto the Zhat = +/-1 sector.
/// Stored unnormalized; requires Zhat to commute with every term of e.
LieElement sector_project(const LieElement& e, int sign);

/// P_{sigma_{jk}}: X/Y pair on (j,k) dressed with Z's on the sigma subset of
/// the remaining qubits (bitmask over 1-based qubits, bit q-1 for qubit q);
/// pair type XY for even |sigma|, YX for odd.
LieElement make_Psigma(int n, int j, int k, std::uint64_t sigma);

/// P_{mu,sigma_{jk}}: additionally multiplies YX pair factors on the
/// disjoint ordered pairs in mu.  Phase normalized to keep the element
/// skew-Hermitian; membership/independence checks treat sign as free.
LieElement make_Pmusigma(int n, int j, int k,
                         const std::vector<std::pair<int, int>>& mu, std::uint64_t sigma);

/// Rebuilds P_{j,k} by actual nested commutators of path XY generators
/// (and, for Dminus with odd n, the full-cycle nesting (1/2)ad_{iXY_{n,1}}
/// P_{1,n}); returns max |coefficient difference| vs the closed form.
double nested_generation_residual_P(int n, int j, int k);
double nested_generation_residual_Dminus_cycle(int n);

/// One verified commutation relation instance.
struct RelationReport {
    std::string relation;
    int instances = 0;
    double max_residual = 0.0;
    bool pass = true;
};

/// Which family triple (a, s, d) participates per topology:
///   path: P only (SO relations); odd cycle: (P, P^-, D^-);
///   path+Z: (P, Q, D); cycle+Z: both Zhat sectors of (P, Q, D) plus
///   cross-sector commutators == 0.
enum class RelationTopology { Path, OddCycle, PathZ, CycleZ };

/// Exhaustively evaluates every applicable SO/SU relation instance over
/// index triples; residuals are exact zeros up to double rounding.
std::vector<RelationReport> check_su_relations(int n, RelationTopology topo);

/// Verifies the Zhat mapping lemmas (parity-dependent), the involution,
/// the idempotence of (I +/- Zhat)/2, and [Zhat, P_{j,k}] = 0.
std::vector<RelationReport> check_zhat_maps(int n);

/// Sum_{l=1}^{floor(n/2)} C(n,2l) 2^{n-2l}; for n <= 5 also constructs one
/// canonical P_{mu,sigma} per (support, sigma) choice and rank-verifies
/// linear independence of the whole collection.
unsigned long long count_clique_lower_bound(int n);

}  // namespace xylab
