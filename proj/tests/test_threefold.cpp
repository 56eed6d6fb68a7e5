#include "bpl/error.hpp"
#include "bpl/threefold.hpp"

#include "doctest.h"
#include "oracles.hpp"

using namespace bpl;

namespace {

FiberedLagrangian xi1(int k1 = 2, int l1 = 1) { return build_Xi(1, {{{1, 1, 1}}, {{k1, l1, 1}}}); }

}  // namespace

TEST_CASE("block budget closes for small genus") {
    for (int g = 1; g <= 4; ++g) {
        const BlockBudget b = xi_budget(g);
        CHECK(b.r_prime == 243 + 36 * (g - 1));
        CHECK(b.rho() == 81 + 18 * (g - 1));
        CHECK(b.rho_tilde() == 162 + 18 * (g - 1));
    }
}

TEST_CASE("3d Maslov of gamma products") {
    for (int g = 1; g <= 2; ++g) {
        const FiberedLagrangian Xi = g == 1 ? xi1() : build_Xi(2, {{{1, 1, 1}}, {{2, 1, 1}}, {{1, 2, 0}}});
        for (int n = 0; n <= 5; ++n) {
            const ThreefoldLagrangian T = build_gamma(n, Xi);
            CHECK(maslov_3d(T) == 2 * n);
            CHECK(total_repeats(T) % T.budget.r_prime == 0);
            CHECK_NOTHROW(check_threefold_embedded(T));
            CHECK(maslov_3d(reversed(T)) == -2 * n);
        }
    }
}

TEST_CASE("plain product circle has Maslov two") {
    const ThreefoldLagrangian T = build_product_circle(xi1(), xi_budget(1).r_prime);
    CHECK(maslov_3d(T) == 2);
    CHECK(full_rotations(T) == 0);
}

TEST_CASE("capacity below the budget is refused") {
    CHECK_THROWS_AS(build_gamma(1, xi1(), 1), Error);
}

TEST_CASE("annulus count is h times k1 with h from brute force") {
    for (int n = 1; n <= 3; ++n)
        for (int k1 = 0; k1 <= 3; ++k1) {
            const ThreefoldLagrangian T = with_displaced_pair(build_gamma(n, xi1(k1, 2)));
            const AnnulusCount a = annulus_count(T);
            const long h = static_cast<long>(oracle::closed_crossings(traversal(T.base3)).size());
            CHECK(a.h == h);
            CHECK(a.count == h * k1);
            CHECK(a.parallel + a.antiparallel == h * (2 * k1 + 2 + 1));
        }
}

TEST_CASE("2d annulus count of a displaced T equals k") {
    for (int k = 0; k <= 3; ++k) {
        const FiberedLagrangian L = build_T(k, 1, 1);
        CHECK(annulus_count_2d(L, displaced_copy(L)) == k);
    }
}

TEST_CASE("corrupting a block breaks closure or embeddedness") {
    ThreefoldLagrangian T = build_gamma(2, xi1());
    REQUIRE_FALSE(T.blocks.empty());
    T.blocks[0].repeats += 1;
    bool rejected = false;
    try {
        full_rotations(T);
        check_threefold_embedded(T);
    } catch (const Error& e) {
        rejected = e.kind() == ErrorKind::InvalidConstruction;
    }
    CHECK(rejected);
}

TEST_CASE("vertical sphere reduces to the fiber computation") {
    const FiberedLagrangian Xi = xi1();
    const ThreefoldLagrangian T = build_gamma(1, Xi);
    const Sphere3 s = vertical_sphere(T, Xi.spheres.at(0).name);
    const Floer3 f = hf_3d(T, s);
    CHECK(f.crossings == 1);
    REQUIRE(f.reduced.has_value());
    CHECK(f.rank == hf_with_sphere(Xi, Xi.spheres.at(0)).rank);
}

TEST_CASE("C3 product invariants") {
    const C3Invariants a = c3_product_invariants(build_Lambda({{{0, 1, 0}}, {{0, 2, 0}}}));
    const C3Invariants b = c3_product_invariants(build_Lambda({{{0, 2, 0}}, {{0, 4, 0}}}));
    CHECK(a.maslov.front() == 2);
    CHECK(a.N == 1);
    CHECK(b.N == 2);
    CHECK(c3_distinguished(a, b));
    CHECK_FALSE(c3_distinguished(a, a));
}
