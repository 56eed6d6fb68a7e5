#include "bpl/error.hpp"
#include "bpl/lattice.hpp"

#include "doctest.h"
#include "oracles.hpp"

#include <algorithm>
#include <random>

using namespace bpl;

TEST_CASE("lattice rank is the product of a_i - 1") {
    CHECK(build_lattice({3, 3}).rank == 4);
    CHECK(build_lattice({2, 4, 4}).rank == 9);
    CHECK(build_lattice({3, 3, 3}).rank == 8);
}

TEST_CASE("invalid exponents are rejected") {
    CHECK_THROWS_AS(build_lattice({0, 3}), Error);
    CHECK_THROWS_AS(build_lattice({}), Error);
    CHECK(build_lattice({1, 3}).rank == 0);
}

TEST_CASE("twists preserve the intersection form on random lattices") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<int> a{2 + int(rng() % 3), 2 + int(rng() % 3)};
        const MilnorLattice lat = build_lattice(a);
        for (int v = 0; v < lat.rank; ++v) {
            const MatZ T = twist_operator(lat, v, 1).matrix;
            const MatZ Ti = twist_operator(lat, v, -1).matrix;
            CHECK(equal(mul(mul(transpose(T), lat.gram), T), lat.gram));
            CHECK(equal(mul(T, Ti), MatZ(MatZ::Identity(lat.rank, lat.rank))));
        }
    }
}

TEST_CASE("twist fixes vectors orthogonal to the cycle and moves the cycle by c<v,v>") {
    const MilnorLattice lat = build_lattice({3, 3});
    for (int v = 0; v < lat.rank; ++v)
        for (int w = 0; w < lat.rank; ++w) {
            VecZ x = VecZ::Zero(lat.rank);
            x(w) = 1;
            const VecZ y = twist(lat, v, x, 1);
            if (lat.gram(w, v) == 0) CHECK(y == x);
        }
}

TEST_CASE("charpoly matches the product-of-roots oracle on small tuples") {
    for (const auto& a : oracle::tuples_up_to(12, 3)) {
        const PolyZ ref = oracle::spectrum_by_roots(a);
        REQUIRE_FALSE(ref.empty());
        CHECK(charpoly(total_monodromy(build_lattice(a))) == ref);
        CHECK(spectrum_polynomial(a) == ref);
    }
}

TEST_CASE("spectrum is invariant under relabelling the exponents") {
    for (std::vector<int> a : {std::vector<int>{2, 3, 4}, std::vector<int>{3, 5}, std::vector<int>{2, 2, 5}}) {
        std::sort(a.begin(), a.end());
        const PolyZ base = charpoly(total_monodromy(build_lattice(a)));
        do {
            CHECK(charpoly(total_monodromy(build_lattice(a))) == base);
        } while (std::next_permutation(a.begin(), a.end()));
    }
}

TEST_CASE("charpoly of a conjugated monodromy is unchanged") {
    const MilnorLattice lat = build_lattice({2, 3, 3});
    const MatZ M = total_monodromy(lat);
    const MatZ T = twist_operator(lat, 1, 1).matrix;
    const MatZ Ti = twist_operator(lat, 1, -1).matrix;
    CHECK(charpoly(mul(mul(T, M), Ti)) == charpoly(M));
}

TEST_CASE("cyclotomic polynomials agree with the oracle") {
    std::map<int, PolyZ> memo;
    for (int d = 1; d <= 30; ++d) CHECK(cyclotomic(d) == oracle::cyclotomic(d, memo));
}

TEST_CASE("phi factorization identity") {
    for (int b : {3, 6}) {
        Exponents e;
        e.a = {3, 3};
        e.b = b;
        const MilnorLattice lat = build_lattice({3, 3, b});
        const int k = b / 3;
        CHECK(equal(power(twist_product(lat, phi_factorization(e, k)), k), power(total_monodromy(lat), b)));
    }
}

TEST_CASE("matrix export round trip") {
    const MilnorLattice lat = build_lattice({2, 4, 4});
    CHECK(equal(import_matrix(export_matrix(lat.gram)), lat.gram));
    CHECK(equal(import_matrix(export_matrix(lat.seifert)), lat.seifert));
}
