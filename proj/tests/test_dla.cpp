#include "doctest.h"
#include "xylab/catalog.hpp"
#include "xylab/dla.hpp"

using namespace xylab;

TEST_SUITE("dla") {
    TEST_CASE("closure dimensions match the closed forms, n = 3..5") {
        for (Topology t : {Topology::XY_path, Topology::XY_cycle, Topology::XY_clique,
                           Topology::XY_path_Z, Topology::XY_cycle_Z, Topology::XY_clique_Z,
                           Topology::XY_cycle_Z_ZZclique}) {
            for (int n = 3; n <= 5; ++n) {
                CAPTURE(topology_name(t));
                CAPTURE(n);
                const DlaBasis b = build_dla(make_generators(t, n));
                CHECK(b.converged);
                CHECK(b.dim == expected_dim(t, n));
            }
        }
    }

    TEST_CASE("polynomial families stay polynomial up to n = 9") {
        for (int n = 6; n <= 9; ++n) {
            CHECK(build_dla(make_generators(Topology::XY_path, n)).dim ==
                  static_cast<std::size_t>(n) * (n - 1) / 2);
            CHECK(build_dla(make_generators(Topology::XY_cycle_Z, n)).dim ==
                  static_cast<std::size_t>(2 * n * n - 1));
        }
    }

    TEST_CASE("capacity overflow raises and carries the partial basis") {
        try {
            build_dla(make_generators(Topology::XY_clique, 5), /*max_dim=*/50);
            FAIL("expected dla_capacity_error");
        } catch (const dla_capacity_error& e) {
            CHECK(e.partial().dim >= 50);
            CHECK_FALSE(e.partial().converged);
        }
    }

    TEST_CASE("DLA monotonicity under topology containment") {
        for (int n = 4; n <= 5; ++n) {
            const auto path = build_dla(make_generators(Topology::XY_path, n));
            const auto cycle = build_dla(make_generators(Topology::XY_cycle, n));
            const auto clique = build_dla(make_generators(Topology::XY_clique, n));
            CHECK(path.dim <= cycle.dim);
            CHECK(cycle.dim <= clique.dim);
            // Every path element lies in the cycle DLA.
            for (const LieElement& e : path.elements) {
                CHECK(projection_residual(e, cycle) < 1e-9);
            }
        }
    }

    TEST_CASE("Z+ is central in the path+Z DLA") {
        for (int n = 3; n <= 5; ++n) {
            const GeneratorSet gens = make_generators(Topology::XY_path_Z, n);
            const DlaBasis basis = build_dla(gens);
            const LieElement zplus = make_Zplus(n);
            CHECK(projection_residual(zplus, basis) < 1e-9);
            const std::vector<LieElement> cen = center(basis, gens);
            CHECK(!cen.empty());
            // Z+ projects entirely onto the center span.
            LieElement residual = zplus;
            for (const LieElement& c : cen) {
                const double overlap = hs_inner(c, residual) / hs_inner(c, c);
                LieElement scaled = c;
                scaled *= overlap;
                residual -= scaled;
            }
            CHECK(hs_norm(residual) < 1e-8);
            // Every center element commutes with every generator.
            for (const LieElement& c : cen) {
                for (const LieElement& g : gens.generators) {
                    CHECK(hs_norm(commutator(c, g)) < 1e-8);
                }
            }
        }
    }

    TEST_CASE("Hamming-weight blocks of the clique+Z DLA") {
        // n=4, k=1: the weight-1 block is all of su(4), dimension 15.
        const DlaBasis basis = build_dla(make_generators(Topology::XY_clique_Z, 4));
        CHECK(hamming_block_project(basis, 4, 1) == 15);
        CHECK(hamming_block_project(basis, 4, 0) == 0);
        // Block dims sum to C(2n,n) - n - 1 (su(C(n,k)) per inner sector).
        for (int n = 3; n <= 4; ++n) {
            const DlaBasis b = build_dla(make_generators(Topology::XY_clique_Z, n));
            unsigned long long total = 0;
            for (int k = 0; k <= n; ++k) {
                const int blk = hamming_block_project(b, n, k);
                if (k >= 1 && k <= n - 1) {
                    CHECK(blk == static_cast<int>(binomial(n, k) * binomial(n, k) - 1));
                }
                total += static_cast<unsigned long long>(blk);
            }
            CHECK(total == binomial(2 * n, n) - n - 1);
        }
    }

    TEST_CASE("expected_dim reproduces the reference table") {
        const unsigned long long clique[] = {8, 31, 123, 457, 1712, 6429, 24305};
        const unsigned long long clique_z[] = {17, 66, 247, 918, 3425, 12862, 48611};
        const unsigned long long cycle_z_zz[] = {18, 67, 248, 919, 3426, 12863, 48612};
        for (int n = 3; n <= 9; ++n) {
            CHECK(expected_dim(Topology::XY_clique, n) == clique[n - 3]);
            CHECK(expected_dim(Topology::XY_clique_Z, n) == clique_z[n - 3]);
            CHECK(expected_dim(Topology::XY_cycle_Z_ZZclique, n) == cycle_z_zz[n - 3]);
            CHECK(expected_dim(Topology::XY_path_Z, n) ==
                  static_cast<unsigned long long>(n) * n);
        }
        CHECK(expected_dim(Topology::XY_cycle, 6) == 30);  // even: n(n-1)
        CHECK(expected_dim(Topology::XY_cycle, 7) == 48);  // odd: n^2 - 1
    }
}
