#include <random>
#include <unsupported/Eigen/MatrixFunctions>

#include "doctest.h"
#include "xylab/dense.hpp"
#include "xylab/sim.hpp"

using namespace xylab;

namespace {

State random_state(std::mt19937_64& rng, int n) {
    std::normal_distribution<double> g;
    State s(n);
    double nrm = 0.0;
    for (auto& a : s.amp) {
        a = {g(rng), g(rng)};
        nrm += std::norm(a);
    }
    nrm = std::sqrt(nrm);
    for (auto& a : s.amp) a /= nrm;
    return s;
}

Eigen::VectorXcd to_vec(const State& s) {
    Eigen::VectorXcd v(static_cast<Eigen::Index>(s.amp.size()));
    for (std::size_t i = 0; i < s.amp.size(); ++i) v(static_cast<Eigen::Index>(i)) = s.amp[i];
    return v;
}

// exp(i theta G) for a Hermitian LieElement-style generator given densely.
Eigen::MatrixXcd expi(const Eigen::MatrixXcd& G, double theta) {
    return (std::complex<double>(0, theta) * G).exp();
}

}  // namespace

TEST_SUITE("sim") {
    TEST_CASE("Dicke state: uniform weight-w support, unit norm") {
        const State s = dicke_state(5, 2);
        CHECK(s.norm() == doctest::Approx(1.0));
        CHECK(s.out_of_sector_mass(2) == doctest::Approx(0.0));
        const double expect = 1.0 / std::sqrt(10.0);
        for (std::uint64_t x = 0; x < 32; ++x) {
            const double a = std::abs(s.amp[x]);
            if (__builtin_popcountll(x) == 2) {
                CHECK(a == doctest::Approx(expect));
            } else {
                CHECK(a == doctest::Approx(0.0));
            }
        }
    }

    TEST_CASE("RZ and RZZ match exp(i theta Z) phases") {
        std::mt19937_64 rng(1);
        State s = random_state(rng, 3);
        State t = s;
        apply_rz(t, 1, 0.37);
        for (std::uint64_t x = 0; x < 8; ++x) {
            const double sign = ((x >> 1) & 1) ? -1.0 : 1.0;
            const std::complex<double> expected =
                s.amp[x] * std::exp(std::complex<double>(0, sign * 0.37));
            CHECK(std::abs(t.amp[x] - expected) < 1e-14);
        }
        State u = s;
        apply_rzz(u, 0, 2, -0.81);
        for (std::uint64_t x = 0; x < 8; ++x) {
            const double zz = (((x >> 0) & 1) == ((x >> 2) & 1)) ? 1.0 : -1.0;
            const std::complex<double> expected =
                s.amp[x] * std::exp(std::complex<double>(0, zz * -0.81));
            CHECK(std::abs(u.amp[x] - expected) < 1e-14);
        }
    }

    TEST_CASE("XY gate matches the dense matrix exponential") {
        std::mt19937_64 rng(2);
        const int n = 3;
        LieElement gen(n);  // (XX + YY) on 1-based qubits (1,3)
        gen.add_term(word_from_letters("XIX"), 1.0);
        gen.add_term(word_from_letters("YIY"), 1.0);
        // to_dense of the LieElement is i*(XX+YY); divide out the i.
        const Eigen::MatrixXcd G = to_dense(gen) / std::complex<double>(0, 1);
        for (double theta : {0.3, -1.2, 2.9}) {
            const State s = random_state(rng, n);
            State t = s;
            apply_xy(t, 0, 2, theta);  // 0-based qubits 0 and 2
            const Eigen::VectorXcd expected = expi(G, theta) * to_vec(s);
            CHECK((to_vec(t) - expected).cwiseAbs().maxCoeff() < 1e-12);
        }
    }

    TEST_CASE("gates preserve norm and XY preserves Hamming sectors") {
        std::mt19937_64 rng(3);
        std::uniform_real_distribution<double> u(-3.0, 3.0);
        State s = dicke_state(6, 3);
        for (int step = 0; step < 60; ++step) {
            const int a = static_cast<int>(rng() % 6);
            int b = static_cast<int>(rng() % 6);
            if (b == a) b = (b + 1) % 6;
            switch (step % 3) {
                case 0: apply_rz(s, a, u(rng)); break;
                case 1: apply_rzz(s, a, b, u(rng)); break;
                default: apply_xy(s, a, b, u(rng)); break;
            }
        }
        CHECK(s.norm() == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(s.out_of_sector_mass(3) < 1e-12);
    }

    TEST_CASE("expectation matches a manual diagonal sum") {
        ProblemInstance inst;
        inst.n = 2;
        inst.k = 1;
        inst.const_term = 0.5;
        inst.h = {1.0, -2.0};
        inst.J[{0, 1}] = 3.0;
        const std::vector<double> diag = instance_diagonal(inst);
        REQUIRE(diag.size() == 4);
        for (std::uint64_t x = 0; x < 4; ++x) {
            CHECK(diag[x] == doctest::Approx(inst.energy(x)));
        }
        State s = dicke_state(2, 1);  // (|01> + |10>)/sqrt(2)
        CHECK(expectation(s, diag) ==
              doctest::Approx(0.5 * (inst.energy(1) + inst.energy(2))));
    }

    TEST_CASE("capacity limit") {
        CHECK_THROWS_AS(State(kSimCapacity + 1), capacity_error);
    }
}
