#pragma once

#include <bit>
#include <complex>
#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "xylab/errors.hpp"

namespace xylab {

/// Maximum qubit count representable by the single-word symplectic encoding.
inline constexpr int kMaxQubits = 64;

/// A phase-free Pauli word on up to 64 qubits in symplectic encoding:
/// bit q of `x` / `z` is the X / Z component on qubit q+1 (qubits are
/// 1-based throughout the algebra layer, matching the basis-family index
/// conventions; the CLI wire format is 0-based).
///
/// The word denotes the canonical *Hermitian* operator
///   W = i^{|x & z|} X^x Z^z,
/// so a qubit with both bits set carries a Y (i * XZ = Y).
struct PauliWord {
    std::uint64_t x = 0;
    std::uint64_t z = 0;

    friend bool operator==(const PauliWord&, const PauliWord&) = default;
    bool is_identity() const { return x == 0 && z == 0; }
};

struct PauliWordHash {
    std::size_t operator()(const PauliWord& w) const noexcept {
        // splitmix64-style mixing of the two halves.
        auto mix = [](std::uint64_t v) {
            v += 0x9e3779b97f4a7c15ULL;
            v = (v ^ (v >> 30)) * 0xbf58476d1ce4e5b9ULL;
            v = (v ^ (v >> 27)) * 0x94d049bb133111ebULL;
            return v ^ (v >> 31);
        };
        return mix(w.x ^ mix(w.z));
    }
};

inline int parity64(std::uint64_t v) { return std::popcount(v) & 1; }

/// True iff the Hermitian words anticommute (symplectic form is odd).
inline bool anticommute(const PauliWord& a, const PauliWord& b) {
    return (parity64(a.x & b.z) ^ parity64(a.z & b.x)) != 0;
}

/// Product phase exponent: W_a * W_b = i^{product_phase_exp(a,b)} * W_c with
/// c = a XOR b componentwise.  Even exponent iff the words commute.
int product_phase_exp(const PauliWord& a, const PauliWord& b);

/// A signed Pauli string: operator i^{phase_exp} * W_word on `n` qubits.
/// `phase_exp` lives in {0,1,2,3} so the phase is one of {+1, +i, -1, -i}.
struct PauliString {
    int n = 1;
    PauliWord word;
    int phase_exp = 0;  // reduced mod 4

    std::complex<double> phase() const {
        static constexpr std::complex<double> units[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
        return units[phase_exp & 3];
    }
};

/// Single-qubit letter of a word at 1-based qubit q: one of 'I','X','Y','Z'.
char pauli_letter(const PauliWord& w, int q);

/// Construct a word from a letter string like "XZYI" (qubit 1 first).
PauliWord word_from_letters(const std::string& letters);

/// Group product with exact phase accumulation; throws validation_error on
/// mismatched qubit counts.
PauliString multiply(const PauliString& a, const PauliString& b);

/// An element of the real Lie algebra \bigoplus_w R * (i W_w): a finite real
/// combination of i times Hermitian Pauli words, hence skew-Hermitian by
/// construction.  Coefficients with |c| < prune threshold are dropped.
class LieElement {
  public:
    using TermMap = std::unordered_map<PauliWord, double, PauliWordHash>;
    static constexpr double kPrune = 1e-12;

    LieElement() = default;
    explicit LieElement(int n) : n_(n) {
        if (n < 1 || n > kMaxQubits) throw validation_error("qubit count out of range");
    }

    int n() const { return n_; }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    double coeff(const PauliWord& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? 0.0 : it->second;
    }

    /// Adds c * (i W_w), pruning the term if the result is negligible.
    void add_term(const PauliWord& w, double c);

    LieElement& operator+=(const LieElement& o);
    LieElement& operator-=(const LieElement& o);
    LieElement& operator*=(double s);
    friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
    friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
    friend LieElement operator*(double s, LieElement a) { return a *= s; }

    friend bool operator==(const LieElement& a, const LieElement& b);

  private:
    int n_ = 1;
    TermMap terms_;
};

/// [a,b] as a LieElement; exact on phases, double arithmetic on coefficients.
LieElement commutator(const LieElement& a, const LieElement& b);

/// Normalized Hilbert-Schmidt inner product 2^{-n} Tr(a^dag b).  Distinct
/// Pauli words are exactly orthonormal, so this is a sparse dot product.
double hs_inner(const LieElement& a, const LieElement& b);

/// sqrt(hs_inner(a,a)).
double hs_norm(const LieElement& a);

/// Left-multiplication by the Hermitian word W_v: returns W_v * a.  Requires
/// W_v to commute with every word of `a` (so the product stays i*Hermitian);
/// throws validation_error otherwise.  Used for the Zhat mapping lemmas and
/// the (I +/- Zhat)/2 sector projections.
LieElement multiply_word(const PauliWord& v, const LieElement& a);

}  // namespace xylab
