#include "xylab/sim.hpp"

#include <bit>
#include <cmath>

#include "xylab/dla.hpp"  // binomial

namespace xylab {

State::State(int n_qubits) : n(n_qubits) {
    if (n < 1 || n > kSimCapacity) throw capacity_error("statevector capacity exceeded");
    amp.assign(std::size_t{1} << n, {0.0, 0.0});
}

double State::norm() const {
    double s = 0.0;
    for (const auto& a : amp) s += std::norm(a);
    return std::sqrt(s);
}

double State::out_of_sector_mass(int k) const {
    double s = 0.0;
    for (std::size_t x = 0; x < amp.size(); ++x)
        if (std::popcount(x) != static_cast<unsigned>(k)) s += std::norm(amp[x]);
    return s;
}

State dicke_state(int n, int w) {
    if (w < 0 || w > n) throw validation_error("Dicke weight out of range");
    State s(n);
    const double a = 1.0 / std::sqrt(static_cast<double>(binomial(n, w)));
    for (std::size_t x = 0; x < s.amp.size(); ++x)
        if (std::popcount(x) == static_cast<unsigned>(w)) s.amp[x] = a;
    return s;
}

void apply_rz(State& s, int q, double theta) {
    if (q < 0 || q >= s.n) throw validation_error("qubit index out of range");
    const std::complex<double> up(std::cos(theta), std::sin(theta));
    const std::complex<double> dn = std::conj(up);
    const std::size_t bit = std::size_t{1} << q;
    for (std::size_t x = 0; x < s.amp.size(); ++x) s.amp[x] *= (x & bit) ? dn : up;
}

void apply_rzz(State& s, int q1, int q2, double theta) {
    if (q1 < 0 || q1 >= s.n || q2 < 0 || q2 >= s.n || q1 == q2)
        throw validation_error("qubit indices out of range");
    const std::complex<double> up(std::cos(theta), std::sin(theta));
    const std::complex<double> dn = std::conj(up);
    const std::size_t b1 = std::size_t{1} << q1, b2 = std::size_t{1} << q2;
    for (std::size_t x = 0; x < s.amp.size(); ++x) {
        const bool odd = static_cast<bool>(x & b1) != static_cast<bool>(x & b2);
        s.amp[x] *= odd ? dn : up;
    }
}

void apply_xy(State& s, int q1, int q2, double theta) {
    if (q1 < 0 || q1 >= s.n || q2 < 0 || q2 >= s.n || q1 == q2)
        throw validation_error("qubit indices out of range");
    const double c = std::cos(2 * theta);
    const std::complex<double> is(0.0, std::sin(2 * theta));
    const std::size_t b1 = std::size_t{1} << q1, b2 = std::size_t{1} << q2;
    for (std::size_t x = 0; x < s.amp.size(); ++x) {
        if ((x & b1) != 0 || (x & b2) == 0) continue;  // visit the |..0..1..> rep
        const std::size_t y = (x | b1) & ~b2;
        const std::complex<double> a = s.amp[x], b = s.amp[y];
        s.amp[x] = c * a + is * b;
        s.amp[y] = is * a + c * b;
    }
}

double expectation(const State& s, const std::vector<double>& diag) {
    double e = 0.0;
    for (std::size_t x = 0; x < s.amp.size(); ++x) e += diag[x] * std::norm(s.amp[x]);
    return e;
}

std::vector<double> instance_diagonal(const ProblemInstance& inst) {
    std::vector<double> d(std::size_t{1} << inst.n);
    for (std::size_t x = 0; x < d.size(); ++x) d[x] = inst.energy(x);
    return d;
}

}  // namespace xylab
