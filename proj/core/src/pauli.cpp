#include "xylab/pauli.hpp"

namespace xylab {

int product_phase_exp(const PauliWord& a, const PauliWord& b) {
    // W_a = i^{|xa&za|} X^xa Z^za, likewise W_b.  Moving Z^za past X^xb
    // costs (-1)^{|za & xb|}; recanonicalizing the result word W_c costs
    // i^{-|xc&zc|}.
    const PauliWord c{a.x ^ b.x, a.z ^ b.z};
    int e = std::popcount(a.x & a.z) + std::popcount(b.x & b.z) +
            2 * std::popcount(a.z & b.x) - std::popcount(c.x & c.z);
    return ((e % 4) + 4) % 4;
}

char pauli_letter(const PauliWord& w, int q) {
    const std::uint64_t bit = 1ULL << (q - 1);
    const bool hx = w.x & bit, hz = w.z & bit;
    if (hx && hz) return 'Y';
    if (hx) return 'X';
    if (hz) return 'Z';
    return 'I';
}

PauliWord word_from_letters(const std::string& letters) {
    if (letters.size() > static_cast<std::size_t>(kMaxQubits))
        throw validation_error("word too long");
    PauliWord w;
    for (std::size_t i = 0; i < letters.size(); ++i) {
        const std::uint64_t bit = 1ULL << i;
        switch (letters[i]) {
            case 'I': break;
            case 'X': w.x |= bit; break;
            case 'Y': w.x |= bit; w.z |= bit; break;
            case 'Z': w.z |= bit; break;
            default: throw validation_error("invalid Pauli letter");
        }
    }
    return w;
}

PauliString multiply(const PauliString& a, const PauliString& b) {
    if (a.n != b.n) throw validation_error("PauliString qubit counts differ");
    PauliString r;
    r.n = a.n;
    r.word = PauliWord{a.word.x ^ b.word.x, a.word.z ^ b.word.z};
    r.phase_exp = (a.phase_exp + b.phase_exp + product_phase_exp(a.word, b.word)) & 3;
    return r;
}

void LieElement::add_term(const PauliWord& w, double c) {
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) it->second += c;
    if (std::abs(it->second) < kPrune) terms_.erase(it);
}

LieElement& LieElement::operator+=(const LieElement& o) {
    if (n_ != o.n_) throw validation_error("LieElement qubit counts differ");
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

LieElement& LieElement::operator-=(const LieElement& o) {
    if (n_ != o.n_) throw validation_error("LieElement qubit counts differ");
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

LieElement& LieElement::operator*=(double s) {
    if (s == 0.0) {
        terms_.clear();
        return *this;
    }
    for (auto it = terms_.begin(); it != terms_.end();) {
        it->second *= s;
        it = std::abs(it->second) < kPrune ? terms_.erase(it) : std::next(it);
    }
    return *this;
}

bool operator==(const LieElement& a, const LieElement& b) {
    if (a.n_ != b.n_ || a.terms_.size() != b.terms_.size()) return false;
    for (const auto& [w, c] : a.terms_)
        if (std::abs(b.coeff(w) - c) >= LieElement::kPrune) return false;
    return true;
}

LieElement commutator(const LieElement& a, const LieElement& b) {
    if (a.n() != b.n()) throw validation_error("LieElement qubit counts differ");
    LieElement r(a.n());
    for (const auto& [wa, ca] : a.terms()) {
        for (const auto& [wb, cb] : b.terms()) {
            if (!anticommute(wa, wb)) continue;
            // [i W_a, i W_b] = -2 W_a W_b = -2 i^{e} W_c with e odd, i.e.
            // mu * (i W_c) with mu = -2 i^{e-1} = -2 (e==1) or +2 (e==3).
            const int e = product_phase_exp(wa, wb);
            const double mu = (e == 1) ? -2.0 : 2.0;
            r.add_term(PauliWord{wa.x ^ wb.x, wa.z ^ wb.z}, mu * ca * cb);
        }
    }
    return r;
}

double hs_inner(const LieElement& a, const LieElement& b) {
    if (a.n() != b.n()) throw validation_error("LieElement qubit counts differ");
    const LieElement& small = a.size() <= b.size() ? a : b;
    const LieElement& big = a.size() <= b.size() ? b : a;
    double s = 0.0;
    for (const auto& [w, c] : small.terms()) s += c * big.coeff(w);
    return s;
}

double hs_norm(const LieElement& a) { return std::sqrt(hs_inner(a, a)); }

LieElement multiply_word(const PauliWord& v, const LieElement& a) {
    LieElement r(a.n());
    for (const auto& [w, c] : a.terms()) {
        const int e = product_phase_exp(v, w);
        if (e & 1)
            throw validation_error("multiply_word: word does not commute with element term");
        // W_v * (c i W_w) = c i^{e} (i W_c); e even so the factor is real.
        r.add_term(PauliWord{v.x ^ w.x, v.z ^ w.z}, (e == 0 ? c : -c));
    }
    return r;
}

}  // namespace xylab
