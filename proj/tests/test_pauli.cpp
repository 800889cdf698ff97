#include <random>

#include "doctest.h"
#include "xylab/dense.hpp"
#include "xylab/pauli.hpp"

using namespace xylab;

namespace {

PauliWord random_word(std::mt19937_64& rng, int n) {
    const std::uint64_t mask = (n == 64) ? ~0ULL : ((1ULL << n) - 1);
    return PauliWord{rng() & mask, rng() & mask};
}

LieElement random_element(std::mt19937_64& rng, int n, int terms) {
    std::uniform_real_distribution<double> coeff(-2.0, 2.0);
    LieElement e(n);
    for (int t = 0; t < terms; ++t) e.add_term(random_word(rng, n), coeff(rng));
    return e;
}

double dense_diff(const DenseMatrix& a, const DenseMatrix& b) {
    return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace

TEST_SUITE("pauli") {
    TEST_CASE("letters round trip") {
        const PauliWord w = word_from_letters("XZYI");
        CHECK(pauli_letter(w, 1) == 'X');
        CHECK(pauli_letter(w, 2) == 'Z');
        CHECK(pauli_letter(w, 3) == 'Y');
        CHECK(pauli_letter(w, 4) == 'I');
        CHECK(w.x == 0b101u);
        CHECK(w.z == 0b110u);
    }

    TEST_CASE("single-qubit dense matrices") {
        const auto X = to_dense(PauliString{1, word_from_letters("X"), 0});
        const auto Y = to_dense(PauliString{1, word_from_letters("Y"), 0});
        const auto Z = to_dense(PauliString{1, word_from_letters("Z"), 0});
        CHECK(X(0, 1) == std::complex<double>(1, 0));
        CHECK(Y(1, 0) == std::complex<double>(0, 1));
        CHECK(Y(0, 1) == std::complex<double>(0, -1));
        CHECK(Z(0, 0) == std::complex<double>(1, 0));
        CHECK(Z(1, 1) == std::complex<double>(-1, 0));
        // Y = i X Z with the canonical phase folded into the word.
        CHECK(dense_diff(Y, std::complex<double>(0, 1) * X * Z) == doctest::Approx(0.0));
    }

    TEST_CASE("string product matches dense multiplication") {
        std::mt19937_64 rng(1);
        for (int trial = 0; trial < 200; ++trial) {
            PauliString a{4, random_word(rng, 4), static_cast<int>(rng() & 3)};
            PauliString b{4, random_word(rng, 4), static_cast<int>(rng() & 3)};
            const PauliString c = multiply(a, b);
            CHECK(dense_diff(to_dense(c), to_dense(a) * to_dense(b)) < 1e-14);
        }
    }

    TEST_CASE("commutator matches dense AB - BA") {
        std::mt19937_64 rng(2);
        for (int trial = 0; trial < 50; ++trial) {
            const LieElement a = random_element(rng, 4, 5);
            const LieElement b = random_element(rng, 4, 5);
            const DenseMatrix da = to_dense(a);
            const DenseMatrix db = to_dense(b);
            CHECK(dense_diff(to_dense(commutator(a, b)), da * db - db * da) < 1e-12);
        }
    }

    TEST_CASE("antisymmetry and Jacobi identity") {
        std::mt19937_64 rng(3);
        for (int trial = 0; trial < 20; ++trial) {
            const LieElement a = random_element(rng, 5, 4);
            const LieElement b = random_element(rng, 5, 4);
            const LieElement c = random_element(rng, 5, 4);
            CHECK(hs_norm(commutator(a, b) + commutator(b, a)) < 1e-12);
            LieElement jac = commutator(a, commutator(b, c));
            jac += commutator(b, commutator(c, a));
            jac += commutator(c, commutator(a, b));
            CHECK(hs_norm(jac) < 1e-10);
        }
    }

    TEST_CASE("hs_inner matches normalized dense trace") {
        std::mt19937_64 rng(4);
        for (int trial = 0; trial < 20; ++trial) {
            const LieElement a = random_element(rng, 4, 6);
            const LieElement b = random_element(rng, 4, 6);
            const std::complex<double> tr = (to_dense(a).adjoint() * to_dense(b)).trace();
            CHECK(hs_inner(a, b) == doctest::Approx(tr.real() / 16.0).epsilon(1e-12));
            CHECK(std::abs(tr.imag()) < 1e-12);
        }
    }

    TEST_CASE("multiply_word requires commuting words") {
        LieElement e(2);
        e.add_term(word_from_letters("XX"), 1.0);
        e.add_term(word_from_letters("YY"), 0.5);
        const PauliWord zz = word_from_letters("ZZ");
        const LieElement prod = multiply_word(zz, e);
        CHECK(dense_diff(to_dense(prod), to_dense(PauliString{2, zz, 0}) * to_dense(e)) < 1e-14);
        const PauliWord zi = word_from_letters("ZI");
        CHECK_THROWS_AS(multiply_word(zi, e), validation_error);
    }

    TEST_CASE("terms below the prune threshold vanish") {
        LieElement e(3);
        const PauliWord w = word_from_letters("XYZ");
        e.add_term(w, 1.0);
        e.add_term(w, -1.0);
        CHECK(e.is_zero());
        e.add_term(w, 1e-13);
        CHECK(e.is_zero());
    }
}
