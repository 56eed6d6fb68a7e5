#pragma once

#include "bpl/floer.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bpl {

// Signed repeats of the distinguished list V_1..V_{4(r'-1)} picked up by transport past placement.
struct RotationBlock {
    std::string name;
    long repeats = 0;
    LoopPos placement;

    friend bool operator==(const RotationBlock&, const RotationBlock&) = default;
};

// Rotation bookkeeping for a Xi_g fiber: rho repeats the list 3*eta times, rho~ 3*eta~ times.
struct BlockBudget {
    long r_prime = 0;
    long eta = 0;
    long eta_tilde = 0;

    long rho() const { return 3 * eta; }
    long rho_tilde() const { return 3 * eta_tilde; }

    friend bool operator==(const BlockBudget&, const BlockBudget&) = default;
};

BlockBudget xi_budget(int g);

struct ThreefoldLagrangian {
    std::string id;
    int n = 0;
    BaseLoop base3;
    std::vector<RotationBlock> blocks;
    FiberedLagrangian fiber_piece;
    BlockBudget budget;
    long r = 0;
    bool displaced_pair = false;
    std::optional<BaseLoop> displaced_base;

    friend bool operator==(const ThreefoldLagrangian&, const ThreefoldLagrangian&) = default;
};

// gamma_{2n} x Xi. r defaults to the smallest admissible value r'(g).
ThreefoldLagrangian build_gamma(int n, const FiberedLagrangian& Xi, std::optional<long> r = std::nullopt);
// Product of an embedded counterclockwise square with a fiber piece, no blocks.
ThreefoldLagrangian build_product_circle(const FiberedLagrangian& fiber, long r_prime);
ThreefoldLagrangian reversed(const ThreefoldLagrangian& T);
// Adds the parallel push-off L' used for annulus counts.
ThreefoldLagrangian with_displaced_pair(const ThreefoldLagrangian& T);

// Accumulated repeats of blocks strictly between two positions walking forward.
long repeats_between(const ThreefoldLagrangian& T, const LoopPos& from, const LoopPos& to);
long total_repeats(const ThreefoldLagrangian& T);
// Full base rotations t carried by the blocks; throws invalid-construction if they do not close.
long full_rotations(const ThreefoldLagrangian& T);
// At every self-crossing the two fiber images must differ by rho or rho^{-1}.
void check_threefold_embedded(const ThreefoldLagrangian& T);

long maslov_3d(const ThreefoldLagrangian& T);

struct AnnulusCount {
    int h = 0;
    int parallel_per_crossing = 0;      // alpha u alpha'
    int antiparallel_per_crossing = 0;  // alpha u -alpha'
    long parallel = 0, antiparallel = 0, total = 0;
    long count = 0;
};

AnnulusCount annulus_count(const ThreefoldLagrangian& T);
// Displaced pair of T_{k,l,m} pieces in the 2d fiber: half the parallel crossings of L with Lp.
long annulus_count_2d(const FiberedLagrangian& L, const FiberedLagrangian& Lp);
FiberedLagrangian displaced_copy(const FiberedLagrangian& L);
// Crossings of L with its displaced copy where fiber pieces meet in the total space.
void check_displacement(const ThreefoldLagrangian& T);

// Lift of a fiber matching sphere along a base path of the total space.
struct Sphere3 {
    std::string name;
    BaseLoop base_path;
    std::string fiber_sphere;
};

struct Floer3 {
    long rank = 0;
    int crossings = 0;
    std::optional<SphereFloer> reduced;
};

Floer3 hf_3d(const ThreefoldLagrangian& T, const Sphere3& sphere);
// A vertical path from above the base loop down through its top edge, crossing it once.
Sphere3 vertical_sphere(const ThreefoldLagrangian& T, const std::string& fiber_sphere);

struct C3Invariants {
    std::vector<long> maslov;
    long N = 0;  // 0 when every l_i = k_i
};

C3Invariants c3_product_invariants(const FiberedLagrangian& Lambda);
bool c3_distinguished(const C3Invariants& x, const C3Invariants& y);

}  // namespace bpl
